//! Brute-force ground truth over small prime fields.
//!
//! Nothing here calls the fast ideal or graph routines. Spans are expanded
//! into explicit element sets with private modular arithmetic, and every
//! quantifier ranges over all vectors of `F_p^n` or all subsets of vertices.

mod random;

pub use random::{random_algebra, random_perfect_algebra, AlgebraSampler, RandomSpec, MAX_ATTEMPTS};

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::graph::Digraph;
use crate::linalg::{rref, Subspace, Vector};
use crate::scalar::{Field, Scalar};
use crate::vertex_set::VertexSet;

/// Largest `p^n` for which exhaustive enumeration is attempted.
pub const ENUMERATION_GUARD: u128 = 1 << 16;

/// Largest vertex count for subset brute force.
pub const MAX_BRUTE_VERTICES: usize = 20;

/// `F_p^n` with vectors encoded as base-`p` integers, coordinate 0 lowest.
#[derive(Clone, Copy, Debug)]
struct Space {
    p: u64,
    n: usize,
    size: usize,
}

impl Space {
    fn new<F: Field>(field: &F, n: usize) -> Result<Space> {
        let p = field
            .order()
            .ok_or_else(|| Error::Precondition("exhaustive oracles need a finite field".into()))?;
        let size = (p as u128)
            .checked_pow(n as u32)
            .filter(|&s| s <= ENUMERATION_GUARD)
            .ok_or(Error::GuardExceeded {
                size: (p as u128).saturating_pow(n as u32),
                guard: ENUMERATION_GUARD,
            })?;
        Ok(Space {
            p,
            n,
            size: size as usize,
        })
    }

    fn encode(&self, x: &[u64]) -> usize {
        x.iter().rev().fold(0, |acc, &d| acc * self.p as usize + d as usize)
    }

    fn decode(&self, mut code: usize) -> Vec<u64> {
        let mut x = vec![0; self.n];
        for d in x.iter_mut() {
            *d = (code % self.p as usize) as u64;
            code /= self.p as usize;
        }
        x
    }

    fn add_scaled(&self, x: &[u64], c: u64, y: &[u64]) -> Vec<u64> {
        x.iter().zip(y).map(|(a, b)| (a + c * b) % self.p).collect()
    }
}

fn residue<F: Field>(field: &F, x: &F::Elem) -> u64 {
    match field.to_scalar(x) {
        Scalar::Prime { value, .. } => value as u64,
        Scalar::Rational(_) => unreachable!("finite fields yield prime residues"),
    }
}

fn residues<F: Field>(field: &F, v: &[F::Elem]) -> Vec<u64> {
    v.iter().map(|x| residue(field, x)).collect()
}

/// All elements of a span, as a membership table over `F_p^n`.
#[derive(Clone, Debug)]
struct ElementSet {
    members: Vec<bool>,
    list: Vec<usize>,
}

impl ElementSet {
    fn span(space: &Space, generators: &[Vec<u64>]) -> ElementSet {
        let mut members = vec![false; space.size];
        members[0] = true;
        let mut list = vec![0];
        for g in generators {
            let current = list.clone();
            for c in 1..space.p {
                for &s in &current {
                    let v = space.encode(&space.add_scaled(&space.decode(s), c, g));
                    if !members[v] {
                        members[v] = true;
                        list.push(v);
                    }
                }
            }
        }
        ElementSet { members, list }
    }

    fn contains(&self, code: usize) -> bool {
        self.members[code]
    }

    fn is_subset(&self, other: &ElementSet) -> bool {
        self.list.iter().all(|&c| other.contains(c))
    }
}

/// The multiplication table of an algebra in residues.
struct Table {
    space: Space,
    squares: Vec<Vec<u64>>,
}

impl Table {
    fn new<F: Field>(algebra: &EvolutionAlgebra<F>) -> Result<Table> {
        let space = Space::new(algebra.field(), algebra.dim())?;
        let squares = algebra.squares().iter().map(|s| residues(algebra.field(), s)).collect();
        Ok(Table { space, squares })
    }

    /// `xy = sum_i x_i y_i e_i^2`, straight from the definition.
    fn product(&self, x: &[u64], y: &[u64]) -> Vec<u64> {
        let p = self.space.p;
        let mut out = vec![0; self.space.n];
        for i in 0..self.space.n {
            let c = x[i] * y[i] % p;
            for (o, s) in out.iter_mut().zip(&self.squares[i]) {
                *o = (*o + c * s) % p;
            }
        }
        out
    }

    fn unit(&self, j: usize) -> Vec<u64> {
        let mut e = vec![0; self.space.n];
        e[j] = 1;
        e
    }

    /// `xA ⊆ S`; by bilinearity it suffices to multiply by the basis.
    fn absorbed(&self, x: &[u64], s: &ElementSet) -> bool {
        (0..self.space.n).all(|j| s.contains(self.space.encode(&self.product(x, &self.unit(j)))))
    }

    fn is_ideal(&self, s: &ElementSet) -> bool {
        s.list.iter().all(|&c| self.absorbed(&self.space.decode(c), s))
    }

    fn elements<F: Field>(&self, field: &F, s: &Subspace<F>) -> ElementSet {
        let gens: Vec<Vec<u64>> = s.basis().iter().map(|v| residues(field, v)).collect();
        ElementSet::span(&self.space, &gens)
    }
}

/// Every subspace of `F_p^n` exactly once, as RREF canonical forms ordered
/// by dimension and then by pivot set.
pub struct Subspaces<F: Field> {
    field: F,
    n: usize,
    p: u64,
    masks: Vec<u64>,
    mask: usize,
    code: u64,
}

pub fn enumerate_subspaces<F: Field>(field: &F, n: usize) -> Result<Subspaces<F>> {
    let space = Space::new(field, n)?;
    let mut masks: Vec<u64> = (0..1u64 << n).collect();
    masks.sort_by_key(|&m| (m.count_ones(), m));
    Ok(Subspaces {
        field: field.clone(),
        n,
        p: space.p,
        masks,
        mask: 0,
        code: 0,
    })
}

impl<F: Field> Subspaces<F> {
    /// Free coordinates of the echelon form with pivots `mask`: entries right
    /// of a pivot in columns that hold no pivot.
    fn free_slots(&self, mask: u64) -> Vec<(usize, usize)> {
        let pivots: Vec<usize> = (0..self.n).filter(|&c| mask >> c & 1 == 1).collect();
        let mut slots = Vec::new();
        for (r, &c) in pivots.iter().enumerate() {
            for j in c + 1..self.n {
                if mask >> j & 1 == 0 {
                    slots.push((r, j));
                }
            }
        }
        slots
    }
}

impl<F: Field> Iterator for Subspaces<F> {
    type Item = Subspace<F>;

    fn next(&mut self) -> Option<Subspace<F>> {
        let mask = *self.masks.get(self.mask)?;
        let slots = self.free_slots(mask);
        let pivots: Vec<usize> = (0..self.n).filter(|&c| mask >> c & 1 == 1).collect();
        let mut rows: Vec<Vector<F>> = pivots
            .iter()
            .map(|&c| {
                let mut row = vec![self.field.zero(); self.n];
                row[c] = self.field.one();
                row
            })
            .collect();
        let mut rest = self.code;
        for &(r, j) in &slots {
            rows[r][j] = self.field.from_i64((rest % self.p) as i64);
            rest /= self.p;
        }
        self.code += 1;
        if self.code == self.p.pow(slots.len() as u32) {
            self.code = 0;
            self.mask += 1;
        }
        Some(rref(&self.field, self.n, &rows).expect("rows have length n"))
    }
}

/// `S` is an ideal: `xy ∈ S` for all `x ∈ S` and all basis vectors `y`.
pub fn brute_force_is_ideal<F: Field>(algebra: &EvolutionAlgebra<F>, s: &Subspace<F>) -> Result<bool> {
    let table = Table::new(algebra)?;
    Ok(table.is_ideal(&table.elements(algebra.field(), s)))
}

/// All ideals, in [`enumerate_subspaces`] order.
pub fn brute_force_ideals<F: Field>(algebra: &EvolutionAlgebra<F>) -> Result<Vec<Subspace<F>>> {
    Ok(ideals_with_elements(algebra)?.into_iter().map(|(s, _)| s).collect())
}

fn ideals_with_elements<F: Field>(algebra: &EvolutionAlgebra<F>) -> Result<Vec<(Subspace<F>, ElementSet)>> {
    let table = Table::new(algebra)?;
    let mut out = Vec::new();
    for s in enumerate_subspaces(algebra.field(), algebra.dim())? {
        let elements = table.elements(algebra.field(), &s);
        if table.is_ideal(&elements) {
            out.push((s, elements));
        }
    }
    Ok(out)
}

/// Proper ideals contained in no other proper ideal.
pub fn brute_force_maximal_ideals<F: Field>(algebra: &EvolutionAlgebra<F>) -> Result<Vec<Subspace<F>>> {
    let proper: Vec<(Subspace<F>, ElementSet)> = ideals_with_elements(algebra)?
        .into_iter()
        .filter(|(s, _)| !s.is_full())
        .collect();
    Ok(proper
        .iter()
        .filter(|(s, e)| !proper.iter().any(|(t, f)| t.dim() > s.dim() && e.is_subset(f)))
        .map(|(s, _)| s.clone())
        .collect())
}

/// Absorption by definition: every `x` with `xA ⊆ I` lies in `I`.
pub fn brute_force_absorption<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Subspace<F>) -> Result<bool> {
    Ok(brute_force_absorption_witness(algebra, ideal)?.is_none())
}

/// Least `x` (in encoding order) with `xA ⊆ I` but `x ∉ I`.
pub fn brute_force_absorption_witness<F: Field>(
    algebra: &EvolutionAlgebra<F>,
    ideal: &Subspace<F>,
) -> Result<Option<Vector<F>>> {
    let table = Table::new(algebra)?;
    let elements = table.elements(algebra.field(), ideal);
    let field = algebra.field();
    Ok((0..table.space.size)
        .find(|&c| !elements.contains(c) && table.absorbed(&table.space.decode(c), &elements))
        .map(|c| {
            table
                .space
                .decode(c)
                .iter()
                .map(|&d| field.from_i64(d as i64))
                .collect()
        }))
}

fn check_vertices(n: usize) -> Result<()> {
    if n > MAX_BRUTE_VERTICES {
        return Err(Error::GuardExceeded {
            size: 1u128 << n,
            guard: 1u128 << MAX_BRUTE_VERTICES,
        });
    }
    Ok(())
}

/// Endpoints of all paths from `u` in the edge relation `edge`.
fn reachable(n: usize, edge: &[Vec<bool>], u: usize) -> Vec<bool> {
    let mut seen = vec![false; n];
    let mut stack = vec![u];
    seen[u] = true;
    while let Some(v) = stack.pop() {
        for w in 0..n {
            if edge[v][w] && !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    seen
}

/// Every `H` with `T(u) ⊆ H` for all `u ∈ H`, checked on all `2^n` subsets.
pub fn brute_force_hereditary(graph: &Digraph) -> Result<Vec<VertexSet>> {
    let n = graph.n();
    check_vertices(n)?;
    let edge: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| graph.has_edge(u, v)).collect()).collect();
    let trees: Vec<Vec<bool>> = (0..n).map(|u| reachable(n, &edge, u)).collect();
    let mut out: Vec<VertexSet> = (0..1u64 << n)
        .map(VertexSet::from_bits)
        .filter(|h| h.iter().all(|u| (0..n).all(|v| !trees[u][v] || h.contains(v))))
        .collect();
    out.sort();
    Ok(out)
}

/// Maximal members of the hereditary family other than the full set.
pub fn brute_force_maximal_hereditary(graph: &Digraph) -> Result<Vec<VertexSet>> {
    let full = graph.vertices();
    let proper: Vec<VertexSet> = brute_force_hereditary(graph)?
        .into_iter()
        .filter(|&h| h != full)
        .collect();
    Ok(proper
        .iter()
        .copied()
        .filter(|&h| !proper.iter().any(|&k| k != h && h.is_subset(k)))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{PrimeField, Rationals};

    fn f2() -> PrimeField {
        PrimeField::new(2).unwrap()
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        let count = |p, n| enumerate_subspaces(&PrimeField::new(p).unwrap(), n).unwrap().count();
        assert_eq!(count(2, 0), 1);
        assert_eq!(count(2, 3), 16);
        assert_eq!(count(2, 4), 67);
        assert_eq!(count(2, 6), 2825);
        assert_eq!(count(3, 2), 6);
        assert_eq!(count(3, 4), 212);
    }

    #[test]
    fn subspaces_are_distinct() {
        let all: Vec<_> = enumerate_subspaces(&f2(), 4).unwrap().collect();
        for (i, s) in all.iter().enumerate() {
            assert!(!all[i + 1..].contains(s));
        }
    }

    #[test]
    fn guard_and_field_checks() {
        assert!(matches!(
            enumerate_subspaces(&f2(), 17),
            Err(Error::GuardExceeded { .. })
        ));
        assert!(matches!(
            enumerate_subspaces(&Rationals, 2),
            Err(Error::Precondition(_))
        ));
        let p = PrimeField::new(251).unwrap();
        assert!(enumerate_subspaces(&p, 2).is_ok());
        assert!(enumerate_subspaces(&p, 3).is_err());
    }

    #[test]
    fn codim_one_ideal_fails_absorption() {
        let a = catalog::four_dim_codim_one(f2());
        let i = Subspace::spanned_by_units(&f2(), 4, [0, 1, 2]);
        assert!(brute_force_is_ideal(&a, &i).unwrap());
        assert!(!brute_force_absorption(&a, &i).unwrap());
        assert_eq!(brute_force_absorption_witness(&a, &i).unwrap(), Some(vec![0, 0, 0, 1]));
        assert!(brute_force_absorption(&a, &Subspace::full(&f2(), 4)).unwrap());
    }

    #[test]
    fn six_dim_maximal_ideals_over_f2() {
        let a = catalog::six_dim_degenerate(f2());
        let max = brute_force_maximal_ideals(&a).unwrap();
        let h1 = Subspace::spanned_by_units(&f2(), 6, [1, 2, 3, 4, 5]);
        let h2 = Subspace::spanned_by_units(&f2(), 6, [0, 1, 3, 4, 5]);
        assert!(max.contains(&h1) && max.contains(&h2));
        // every hyperplane containing A^2 (codimension 3, so 7 of them)
        let a2 = a.a_squared();
        let hyper: Vec<_> = max.iter().filter(|s| a2.is_subspace_of(s).unwrap()).collect();
        assert_eq!(hyper.len(), 7);
        assert!(max.iter().all(|s| s.codim() == 1));
    }

    #[test]
    fn three_dim_perfect_has_one_maximal_ideal() {
        let a = catalog::three_dim_perfect(f2());
        let max = brute_force_maximal_ideals(&a).unwrap();
        assert_eq!(max, vec![Subspace::spanned_by_units(&f2(), 3, [1, 2])]);
        assert_eq!(brute_force_ideals(&a).unwrap().len(), 4);
    }

    #[test]
    fn hereditary_brute_force() {
        let a = catalog::six_dim_degenerate(Rationals);
        let g = a.associated_graph();
        let max = brute_force_maximal_hereditary(&g).unwrap();
        assert_eq!(
            max,
            vec![
                [1, 2, 3, 4, 5].into_iter().collect(),
                [0, 1, 3, 4, 5].into_iter().collect()
            ]
        );
        let edgeless = Digraph::from_edges(3, &[]).unwrap();
        assert_eq!(brute_force_hereditary(&edgeless).unwrap().len(), 8);
        let cycle = Digraph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        assert_eq!(
            brute_force_hereditary(&cycle).unwrap(),
            vec![VertexSet::EMPTY, VertexSet::full(3)]
        );
        assert_eq!(brute_force_maximal_hereditary(&cycle).unwrap(), vec![VertexSet::EMPTY]);
        assert!(brute_force_hereditary(&Digraph::from_edges(21, &[]).unwrap()).is_err());
    }
}
