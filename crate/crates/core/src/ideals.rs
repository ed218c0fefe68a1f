//! Ideals and their relation to hereditary vertex sets.
//!
//! For an ideal `I`, `H_I = {i : e_i^2 in I}` is hereditary; for a hereditary
//! set `H`, `I_H = span{e_i : i in H}` is an ideal. Most structural questions
//! about ideals reduce to comparing `I` with `I_{H_I}`.

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{nullspace, rref, Subspace, Vector};
use crate::scalar::Field;
use crate::vertex_set::VertexSet;

/// A subspace closed under multiplication by the algebra, together with its
/// hereditary set `H_I`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal<F: Field> {
    subspace: Subspace<F>,
    h_set: VertexSet,
}

impl<F: Field> Ideal<F> {
    /// Admits `subspace` after checking the closure condition.
    pub fn new(algebra: &EvolutionAlgebra<F>, subspace: Subspace<F>) -> Result<Self> {
        check_ambient(algebra, &subspace)?;
        if !is_ideal(algebra, &subspace) {
            return Err(Error::NotAnIdeal);
        }
        Ok(Self::admit(algebra, subspace))
    }

    fn admit(algebra: &EvolutionAlgebra<F>, subspace: Subspace<F>) -> Self {
        let h_set = (0..algebra.dim())
            .filter(|&i| subspace.contains(algebra.square(i)).expect("lengths agree"))
            .collect();
        Ideal { subspace, h_set }
    }

    pub fn zero(algebra: &EvolutionAlgebra<F>) -> Self {
        Self::admit(algebra, Subspace::zero(algebra.field(), algebra.dim()))
    }

    pub fn whole(algebra: &EvolutionAlgebra<F>) -> Self {
        Self::admit(algebra, Subspace::full(algebra.field(), algebra.dim()))
    }

    pub fn subspace(&self) -> &Subspace<F> {
        &self.subspace
    }

    pub fn into_subspace(self) -> Subspace<F> {
        self.subspace
    }

    pub fn dim(&self) -> usize {
        self.subspace.dim()
    }

    pub fn codim(&self) -> usize {
        self.subspace.codim()
    }

    pub fn is_zero(&self) -> bool {
        self.subspace.is_zero()
    }

    pub fn is_whole(&self) -> bool {
        self.subspace.is_full()
    }

    /// `H_I`.
    pub fn h_set(&self) -> VertexSet {
        self.h_set
    }

    /// `I ∩ B`: the basis vectors lying in the ideal.
    pub fn basis_vertices(&self) -> VertexSet {
        (0..self.subspace.ambient_dim())
            .filter(|&i| self.subspace.contains_unit(i))
            .collect()
    }

    pub fn contains(&self, v: &[F::Elem]) -> Result<bool> {
        self.subspace.contains(v)
    }

    pub fn is_subideal_of(&self, other: &Self) -> bool {
        self.subspace.is_subspace_of(&other.subspace).expect("same algebra")
    }

    /// Sum of two ideals is an ideal.
    pub fn sum(&self, algebra: &EvolutionAlgebra<F>, other: &Self) -> Self {
        Self::admit(algebra, self.subspace.sum(&other.subspace).expect("same algebra"))
    }

    /// Intersection of two ideals is an ideal.
    pub fn intersect(&self, algebra: &EvolutionAlgebra<F>, other: &Self) -> Self {
        Self::admit(algebra, self.subspace.intersect(&other.subspace).expect("same algebra"))
    }
}

fn check_ambient<F: Field>(algebra: &EvolutionAlgebra<F>, s: &Subspace<F>) -> Result<()> {
    if s.field() != algebra.field() {
        return Err(Error::FieldMismatch);
    }
    if s.ambient_dim() != algebra.dim() {
        return Err(Error::DimensionMismatch {
            expected: algebra.dim(),
            found: s.ambient_dim(),
        });
    }
    Ok(())
}

/// `x e_i = x_i e_i^2`, so `S` is an ideal iff `e_i^2 in S` for every `i` in
/// the column support of `S`.
pub fn is_ideal<F: Field>(algebra: &EvolutionAlgebra<F>, s: &Subspace<F>) -> bool {
    s.ambient_dim() == algebra.dim()
        && s.column_support()
            .into_iter()
            .all(|i| s.contains(algebra.square(i)).expect("lengths agree"))
}

/// Smallest ideal containing `generators`.
pub fn ideal_closure<F: Field>(algebra: &EvolutionAlgebra<F>, generators: &[Vector<F>]) -> Result<Ideal<F>> {
    let mut s = rref(algebra.field(), algebra.dim(), generators)?;
    // Each round either stops or strictly raises the dimension.
    loop {
        let squares: Vec<Vector<F>> = s
            .column_support()
            .into_iter()
            .map(|i| algebra.square(i).to_vec())
            .collect();
        let next = s.extend(&squares)?;
        if next.dim() == s.dim() {
            break;
        }
        s = next;
    }
    Ok(Ideal::admit(algebra, s))
}

/// `I_H = span{e_i : i in H}` for hereditary `H`.
pub fn ideal_from_hereditary<F: Field>(algebra: &EvolutionAlgebra<F>, h: VertexSet) -> Result<Ideal<F>> {
    algebra.check_set(h)?;
    if !algebra.associated_graph().is_hereditary(h) {
        return Err(Error::NotHereditary(h));
    }
    Ok(Ideal::admit(
        algebra,
        Subspace::spanned_by_units(algebra.field(), algebra.dim(), h.iter()),
    ))
}

/// `H_I = {i : e_i^2 in I}`.
pub fn hereditary_from_ideal<F: Field>(ideal: &Ideal<F>) -> VertexSet {
    ideal.h_set()
}

/// The absorber `{x : xA ⊆ I}`. Since `x e_i = x_i e_i^2`, a coordinate is
/// free exactly when `e_i^2 in I`, so the absorber is `I_{H_I}`.
pub fn absorber<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Ideal<F>) -> Subspace<F> {
    Subspace::spanned_by_units(algebra.field(), algebra.dim(), ideal.h_set().iter())
}

/// `xA ⊆ I` implies `x in I`; equivalently `I = I_{H_I}`.
pub fn has_absorption<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Ideal<F>) -> bool {
    absorber(algebra, ideal) == *ideal.subspace()
}

pub fn basis_vertices_in_ideal<F: Field>(ideal: &Ideal<F>) -> VertexSet {
    ideal.basis_vertices()
}

/// `I = span(I ∩ B)`, a sufficient condition for `I` to be basic.
pub fn is_spanned_by_basis_vertices<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Ideal<F>) -> bool {
    Subspace::spanned_by_units(algebra.field(), algebra.dim(), ideal.basis_vertices().iter()) == *ideal.subspace()
}

/// Why an ideal is maximal.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MaximalityCriterion {
    /// `A^2 ⊆ I` and `I` is a hyperplane.
    ContainsSquareCodimOne,
    /// `I = I_H` with `H` maximal hereditary and `I + A^2 = A`.
    MaximalHereditary,
}

impl MaximalityCriterion {
    pub fn describe(self) -> &'static str {
        match self {
            MaximalityCriterion::ContainsSquareCodimOne => "contains A^2, codimension 1",
            MaximalityCriterion::MaximalHereditary => "I = I_H with H maximal hereditary and I + A^2 = A",
        }
    }
}

/// Decides maximality of a proper ideal; `None` when it is not maximal.
pub fn maximality<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Ideal<F>) -> Result<Option<MaximalityCriterion>> {
    if ideal.is_whole() {
        return Err(Error::WholeAlgebra);
    }
    let a2 = algebra.a_squared();
    if a2.is_subspace_of(ideal.subspace())? {
        return Ok((ideal.codim() == 1).then_some(MaximalityCriterion::ContainsSquareCodimOne));
    }
    let graph = algebra.associated_graph();
    let h = ideal.h_set();
    let hereditary_max = graph.maximal_hereditary_sets().contains(&h);
    let fills = ideal.subspace().sum(&a2)?.is_full();
    Ok((has_absorption(algebra, ideal) && hereditary_max && fills).then_some(MaximalityCriterion::MaximalHereditary))
}

pub fn is_maximal_ideal<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Ideal<F>) -> Result<bool> {
    Ok(maximality(algebra, ideal)?.is_some())
}

/// For a maximal ideal `I`: every basis vertex `e` outside `I` has
/// `T(e) ∪ H_I = B`, and when `dim(A/I) != 1` also `H_I = I ∩ B`.
pub fn maximal_ideal_cover_check<F: Field>(algebra: &EvolutionAlgebra<F>, ideal: &Ideal<F>) -> Result<bool> {
    if !is_maximal_ideal(algebra, ideal)? {
        return Err(Error::NotMaximal);
    }
    let graph = algebra.associated_graph();
    let all = graph.vertices();
    let outside = ideal.basis_vertices().complement(algebra.dim());
    let covers = outside.iter().all(|e| {
        graph
            .tree(VertexSet::singleton(e))
            .expect("in range")
            .union(ideal.h_set())
            == all
    });
    let basis_clause = ideal.codim() == 1 || ideal.h_set() == ideal.basis_vertices();
    Ok(covers && basis_clause)
}

/// The hyperplanes containing `A^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperplaneFamily<F: Field> {
    /// `A^2 = A`: nothing.
    None,
    /// `A^2` is itself a hyperplane.
    Unique(Subspace<F>),
    /// `codim(A^2) >= 2`: one hyperplane per point of the projective space of
    /// `A/A^2`, listed only over a finite field within the limit.
    Family {
        codim: usize,
        count: Option<u128>,
        hyperplanes: Option<Vec<Subspace<F>>>,
    },
}

/// One `I_H` with `H` maximal hereditary and its maximality verdict.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HereditaryCandidate<F: Field> {
    pub h: VertexSet,
    pub ideal: Ideal<F>,
    pub criterion: Option<MaximalityCriterion>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MaximalIdealsReport<F: Field> {
    pub codim_a_squared: usize,
    pub a_squared: Subspace<F>,
    pub hyperplanes: HyperplaneFamily<F>,
    pub candidates: Vec<HereditaryCandidate<F>>,
    pub perfect: bool,
    /// For perfect algebras the maximal ideals are exactly the maximal candidates.
    pub complete: Option<Vec<Ideal<F>>>,
}

impl<F: Field> MaximalIdealsReport<F> {
    /// Every maximal ideal the report names explicitly, without duplicates.
    pub fn explicit_maximal_ideals(&self) -> Vec<Subspace<F>> {
        let mut out: Vec<Subspace<F>> = Vec::new();
        let mut push = |s: &Subspace<F>| {
            if !out.contains(s) {
                out.push(s.clone());
            }
        };
        match &self.hyperplanes {
            HyperplaneFamily::Unique(s) => push(s),
            HyperplaneFamily::Family {
                hyperplanes: Some(list),
                ..
            } => list.iter().for_each(&mut push),
            _ => {}
        }
        for c in &self.candidates {
            if c.criterion.is_some() {
                push(c.ideal.subspace());
            }
        }
        out
    }
}

/// Number of hyperplanes of `K^c` when `|K| = q`: `(q^c - 1)/(q - 1)`.
fn projective_points(q: u64, c: usize) -> Option<u128> {
    let mut total: u128 = 0;
    let mut pow: u128 = 1;
    for _ in 0..c {
        total = total.checked_add(pow)?;
        pow = pow.checked_mul(q as u128)?;
    }
    Some(total)
}

/// Hyperplanes of `K^n` containing `s`, over a finite field.
fn hyperplanes_containing<F: Field>(field: &F, s: &Subspace<F>, q: u64) -> Vec<Subspace<F>> {
    let n = s.ambient_dim();
    // Functionals vanishing on s.
    let annihilator = nullspace(field, s.basis(), n);
    let c = annihilator.len();
    let mut out = Vec::new();
    // Projective points: coefficient vectors whose first nonzero entry is 1.
    for lead in 0..c {
        let free = c - lead - 1;
        let total = q.pow(free as u32);
        for code in 0..total {
            let mut coeffs = vec![field.zero(); c];
            coeffs[lead] = field.one();
            let mut rest = code;
            for slot in coeffs.iter_mut().skip(lead + 1) {
                *slot = field.from_i64((rest % q) as i64);
                rest /= q;
            }
            let mut functional = vec![field.zero(); n];
            for (a, row) in coeffs.iter().zip(&annihilator) {
                for (f, r) in functional.iter_mut().zip(row) {
                    *f = field.add(f, &field.mul(a, r));
                }
            }
            let kernel = nullspace(field, &[functional], n);
            out.push(rref(field, n, &kernel).expect("kernel vectors have length n"));
        }
    }
    out
}

pub fn maximal_ideals_report<F: Field>(algebra: &EvolutionAlgebra<F>, limit: usize) -> MaximalIdealsReport<F> {
    let a2 = algebra.a_squared();
    let codim = a2.codim();
    let hyperplanes = match codim {
        0 => HyperplaneFamily::None,
        1 => HyperplaneFamily::Unique(a2.clone()),
        c => {
            let count = algebra.field().order().and_then(|q| projective_points(q, c));
            let hyperplanes = match (algebra.field().order(), count) {
                (Some(q), Some(k)) if k <= limit as u128 => Some(hyperplanes_containing(algebra.field(), &a2, q)),
                _ => None,
            };
            HyperplaneFamily::Family {
                codim: c,
                count,
                hyperplanes,
            }
        }
    };
    let graph = algebra.associated_graph();
    let candidates: Vec<HereditaryCandidate<F>> = graph
        .maximal_hereditary_sets()
        .into_iter()
        .map(|h| {
            let ideal = ideal_from_hereditary(algebra, h).expect("maximal sets are hereditary");
            let criterion = maximality(algebra, &ideal).expect("maximal hereditary sets are proper");
            HereditaryCandidate { h, ideal, criterion }
        })
        .collect();
    let perfect = codim == 0;
    let complete = perfect.then(|| {
        candidates
            .iter()
            .filter(|c| c.criterion.is_some())
            .map(|c| c.ideal.clone())
            .collect()
    });
    MaximalIdealsReport {
        codim_a_squared: codim,
        a_squared: a2,
        hyperplanes,
        candidates,
        perfect,
        complete,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::scalar::{PrimeField, Rationals};

    fn q(v: &[i64]) -> Vector<Rationals> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    fn set(v: &[usize]) -> VertexSet {
        v.iter().copied().collect()
    }

    fn span(a: &EvolutionAlgebra<Rationals>, vs: &[&[i64]]) -> Subspace<Rationals> {
        let vs: Vec<_> = vs.iter().map(|v| q(v)).collect();
        rref(a.field(), a.dim(), &vs).unwrap()
    }

    #[test]
    fn closure_examples() {
        let a = catalog::plane_antisymmetric(Rationals);
        let i = ideal_closure(&a, &[q(&[1, 1])]).unwrap();
        assert_eq!(i.subspace(), &span(&a, &[&[1, 1]]));

        assert!(ideal_closure(&a, &[]).unwrap().is_zero());

        let e = catalog::six_dim_degenerate(Rationals);
        let i = ideal_closure(&e, &[e.unit(2)]).unwrap();
        assert_eq!(
            i.subspace(),
            &span(&e, &[&[0, 0, 1, 0, 0, 0], &[0, 0, 0, 1, 1, 0], &[0, 0, 0, 0, 0, 1]])
        );
        assert!(!i.contains(&e.unit(3)).unwrap());
    }

    #[test]
    fn ideal_membership_test() {
        let a = catalog::four_dim_non_maximal(Rationals);
        let j = span(&a, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]]);
        assert!(is_ideal(&a, &j));
        assert!(is_ideal(&a, &Subspace::full(&Rationals, 4)));
        let e = catalog::six_dim_degenerate(Rationals);
        assert!(!is_ideal(&e, &Subspace::spanned_by_units(&Rationals, 6, [2])));
        assert_eq!(
            Ideal::new(&e, Subspace::spanned_by_units(&Rationals, 6, [2])),
            Err(Error::NotAnIdeal)
        );
    }

    #[test]
    fn ideals_of_hereditary_sets() {
        let r = catalog::three_dim_perfect(Rationals);
        let i = ideal_from_hereditary(&r, set(&[1, 2])).unwrap();
        assert_eq!(i.subspace(), &Subspace::spanned_by_units(&Rationals, 3, [1, 2]));
        assert!(ideal_from_hereditary(&r, VertexSet::EMPTY).unwrap().is_zero());
        let e = catalog::six_dim_degenerate(Rationals);
        assert_eq!(ideal_from_hereditary(&e, set(&[1, 2, 3, 4, 5])).unwrap().dim(), 5);
        assert!(ideal_from_hereditary(&e, set(&[0])).is_err());
        assert!(ideal_from_hereditary(&e, VertexSet::full(6)).unwrap().is_whole());
    }

    #[test]
    fn hereditary_sets_of_ideals() {
        let a = catalog::plane_antisymmetric(Rationals);
        let i = ideal_closure(&a, &[q(&[1, 1])]).unwrap();
        assert_eq!(hereditary_from_ideal(&i), set(&[0, 1]));

        let r = catalog::three_dim_perfect(Rationals);
        assert_eq!(Ideal::zero(&r).h_set(), VertexSet::EMPTY);

        let s = catalog::three_dim_split(Rationals);
        let i = ideal_closure(&s, &[q(&[1, 1, 0])]).unwrap();
        assert_eq!(i.h_set(), set(&[0, 1]));
        assert_eq!(i.basis_vertices(), VertexSet::EMPTY);

        // Sinks always lie in H_I.
        let e = catalog::six_dim_degenerate(Rationals);
        assert_eq!(Ideal::zero(&e).h_set(), set(&[3, 5]));
    }

    #[test]
    fn absorption() {
        let d = catalog::four_dim_degenerate(Rationals);
        let i = ideal_from_hereditary(&d, set(&[0, 1, 2])).unwrap();
        assert!(!has_absorption(&d, &i));
        let x = q(&[1, 0, 0, 1]);
        for j in 0..4 {
            assert!(i.contains(&d.product(&x, &d.unit(j)).unwrap()).unwrap());
        }
        assert!(!i.contains(&x).unwrap());

        assert!(has_absorption(&d, &Ideal::whole(&d)));

        let c = catalog::four_dim_codim_one(Rationals);
        let i = ideal_from_hereditary(&c, set(&[0, 1, 2])).unwrap();
        assert!(!has_absorption(&c, &i));
        assert_eq!(i.h_set(), VertexSet::full(4));
        assert_eq!(i.basis_vertices(), set(&[0, 1, 2]));
    }

    #[test]
    fn basis_vertices() {
        let e = catalog::six_dim_degenerate(Rationals);
        let i = ideal_closure(&e, &[e.unit(2)]).unwrap();
        assert_eq!(i.basis_vertices(), set(&[2, 5]));
        let h = set(&[1, 2, 3, 4, 5]);
        assert_eq!(ideal_from_hereditary(&e, h).unwrap().basis_vertices(), h);
    }

    #[test]
    fn maximal_ideals() {
        let e = catalog::six_dim_degenerate(Rationals);
        let i1 = ideal_from_hereditary(&e, set(&[1, 2, 3, 4, 5])).unwrap();
        assert_eq!(
            maximality(&e, &i1).unwrap(),
            Some(MaximalityCriterion::ContainsSquareCodimOne)
        );

        let r = catalog::three_dim_perfect(Rationals);
        let i = ideal_from_hereditary(&r, set(&[1, 2])).unwrap();
        assert_eq!(
            maximality(&r, &i).unwrap(),
            Some(MaximalityCriterion::MaximalHereditary)
        );

        let n = catalog::four_dim_non_maximal(Rationals);
        let i = ideal_from_hereditary(&n, set(&[0, 1])).unwrap();
        assert!(!is_maximal_ideal(&n, &i).unwrap());
        let j = Ideal::new(&n, span(&n, &[&[1, 0, 0, 0], &[0, 1, 0, 0], &[0, 0, 1, 1]])).unwrap();
        assert!(i.is_subideal_of(&j) && i != j && !j.is_whole());
        assert!(is_maximal_ideal(&n, &j).unwrap());

        assert_eq!(is_maximal_ideal(&r, &Ideal::whole(&r)), Err(Error::WholeAlgebra));

        let a = catalog::plane_antisymmetric(Rationals);
        let i = ideal_closure(&a, &[q(&[1, 1])]).unwrap();
        assert!(is_maximal_ideal(&a, &i).unwrap());
    }

    #[test]
    fn reports() {
        let r = catalog::three_dim_perfect(Rationals);
        let rep = maximal_ideals_report(&r, 1000);
        assert_eq!(rep.hyperplanes, HyperplaneFamily::None);
        let complete = rep.complete.clone().unwrap();
        assert_eq!(complete.len(), 1);
        assert_eq!(
            complete[0].subspace(),
            &Subspace::spanned_by_units(&Rationals, 3, [1, 2])
        );

        let e = catalog::six_dim_degenerate(Rationals);
        let rep = maximal_ideals_report(&e, 1000);
        assert_eq!(rep.codim_a_squared, 3);
        assert!(matches!(
            rep.hyperplanes,
            HyperplaneFamily::Family {
                codim: 3,
                count: None,
                hyperplanes: None
            }
        ));
        assert_eq!(rep.candidates.len(), 2);
        assert!(rep
            .candidates
            .iter()
            .all(|c| c.criterion == Some(MaximalityCriterion::ContainsSquareCodimOne)));
        assert!(rep.complete.is_none());

        let c = catalog::two_cycle(Rationals);
        let rep = maximal_ideals_report(&c, 10);
        assert_eq!(rep.candidates.len(), 1);
        assert_eq!(rep.candidates[0].h, VertexSet::EMPTY);
        assert!(rep.candidates[0].ideal.is_zero());
        assert_eq!(rep.complete.unwrap().len(), 1);
    }

    #[test]
    fn finite_field_hyperplanes() {
        // Over F2, codim(A^2) = 3 gives 7 hyperplanes containing A^2.
        let e = catalog::six_dim_degenerate(PrimeField::new(2).unwrap());
        let rep = maximal_ideals_report(&e, 1000);
        let HyperplaneFamily::Family {
            codim: 3,
            count: Some(7),
            hyperplanes: Some(list),
        } = &rep.hyperplanes
        else {
            panic!("{:?}", rep.hyperplanes);
        };
        assert_eq!(list.len(), 7);
        let a2 = e.a_squared();
        for (k, h) in list.iter().enumerate() {
            assert_eq!(h.dim(), 5);
            assert!(a2.is_subspace_of(h).unwrap());
            assert!(list[..k].iter().all(|o| o != h));
        }
        let explicit = rep.explicit_maximal_ideals();
        assert_eq!(explicit.len(), 7);
        let small = maximal_ideals_report(&e, 6);
        assert!(matches!(
            small.hyperplanes,
            HyperplaneFamily::Family {
                count: Some(7),
                hyperplanes: None,
                ..
            }
        ));
    }

    #[test]
    fn cover_check() {
        let r = catalog::three_dim_perfect(Rationals);
        let i = ideal_from_hereditary(&r, set(&[1, 2])).unwrap();
        assert!(maximal_ideal_cover_check(&r, &i).unwrap());
        let e = catalog::six_dim_degenerate(Rationals);
        let i1 = ideal_from_hereditary(&e, set(&[1, 2, 3, 4, 5])).unwrap();
        assert!(maximal_ideal_cover_check(&e, &i1).unwrap());
        let n = catalog::four_dim_non_maximal(Rationals);
        let i = ideal_from_hereditary(&n, set(&[0, 1])).unwrap();
        assert_eq!(maximal_ideal_cover_check(&n, &i), Err(Error::NotMaximal));
    }

    #[test]
    fn basic_span() {
        let e = catalog::six_dim_degenerate(Rationals);
        let i = ideal_from_hereditary(&e, set(&[4, 5])).unwrap();
        assert!(is_spanned_by_basis_vertices(&e, &i));
        let a = catalog::plane_antisymmetric(Rationals);
        let i = ideal_closure(&a, &[q(&[1, 1])]).unwrap();
        assert!(!is_spanned_by_basis_vertices(&a, &i));
    }

    #[test]
    fn projective_counts() {
        assert_eq!(projective_points(2, 3), Some(7));
        assert_eq!(projective_points(3, 2), Some(4));
        assert_eq!(projective_points(5, 1), Some(1));
    }
}
