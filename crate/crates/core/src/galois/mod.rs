//! The order-preserving maps `f: H -> I_H` and `h: I -> H_I` between
//! hereditary sets and ideals, and a registry of checkable statements about
//! them.

mod report;
mod suite;

pub use report::{algebra_signature, PropertyOutcome, PropertyReport, Status, Witness};
pub use suite::{random_ideal, run_suite_batch, run_theorem_suite, run_theorem_suite_with, SuiteConfig, REGISTRY};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::EvolutionAlgebra;
use crate::error::{Error, Result};
use crate::ideals::{has_absorption, ideal_closure, ideal_from_hereditary, Ideal};
use crate::linalg::Subspace;
use crate::oracle;
use crate::scalar::Field;
use crate::vertex_set::VertexSet;
use report::{show_ideal, show_set};

/// Domains on which the adjunction is considered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ConnectionMode {
    /// All hereditary sets and all ideals.
    Full,
    /// Hereditary saturated sets and ideals with the absorption property.
    Restricted,
}

/// Whether `I_H ⊆ I ⇔ H ⊆ H_I` holds for this pair.
///
/// Fails with an error when `h` is not hereditary or, in restricted mode,
/// when `h` is not saturated or `ideal` lacks absorption.
pub fn check_adjunction<F: Field>(
    algebra: &EvolutionAlgebra<F>,
    h: VertexSet,
    ideal: &Ideal<F>,
    mode: ConnectionMode,
) -> Result<bool> {
    let ih = ideal_from_hereditary(algebra, h)?;
    if mode == ConnectionMode::Restricted {
        if !algebra.associated_graph().is_saturated(h) {
            return Err(Error::Precondition(format!(
                "{} is not saturated",
                show_set(algebra, h)
            )));
        }
        if !has_absorption(algebra, ideal) {
            return Err(Error::Precondition(format!(
                "{} lacks the absorption property",
                show_ideal(ideal)
            )));
        }
    }
    Ok(ih.is_subideal_of(ideal) == h.is_subset(ideal.h_set()))
}

/// Admitted members of one side of the connection.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConnectionDomain<F: Field> {
    mode: ConnectionMode,
    sets: Vec<VertexSet>,
    ideals: Vec<Ideal<F>>,
}

impl<F: Field> ConnectionDomain<F> {
    /// Checks every set is hereditary and, in restricted mode, saturated,
    /// and every ideal absorbs in restricted mode.
    pub fn new(
        algebra: &EvolutionAlgebra<F>,
        mode: ConnectionMode,
        sets: Vec<VertexSet>,
        ideals: Vec<Ideal<F>>,
    ) -> Result<Self> {
        let g = algebra.associated_graph();
        for &h in &sets {
            if !g.is_hereditary(h) {
                return Err(Error::NotHereditary(h));
            }
            if mode == ConnectionMode::Restricted && !g.is_saturated(h) {
                return Err(Error::Precondition(format!(
                    "{} is not saturated",
                    show_set(algebra, h)
                )));
            }
        }
        if mode == ConnectionMode::Restricted {
            if let Some(i) = ideals.iter().find(|i| !has_absorption(algebra, i)) {
                return Err(Error::Precondition(format!(
                    "{} lacks the absorption property",
                    show_ideal(i)
                )));
            }
        }
        Ok(ConnectionDomain { mode, sets, ideals })
    }

    pub fn mode(&self) -> ConnectionMode {
        self.mode
    }

    pub fn sets(&self) -> &[VertexSet] {
        &self.sets
    }

    pub fn ideals(&self) -> &[Ideal<F>] {
        &self.ideals
    }

    /// Pairs `(set, ideal index)` on which the adjunction fails.
    pub fn adjunction_failures(&self, algebra: &EvolutionAlgebra<F>) -> Vec<(VertexSet, usize)> {
        let mut out = Vec::new();
        for &h in &self.sets {
            for (k, i) in self.ideals.iter().enumerate() {
                if !check_adjunction(algebra, h, i, self.mode).expect("members were admitted") {
                    out.push((h, k));
                }
            }
        }
        out
    }
}

/// Families on which the lattice identities are evaluated.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LatticeSample<F: Field> {
    /// Families of hereditary saturated sets; a family whose union is not
    /// hereditary and saturated is ignored.
    pub set_families: Vec<Vec<VertexSet>>,
    /// Families of ideals; only members with the absorption property count.
    pub ideal_families: Vec<Vec<Ideal<F>>>,
}

pub const LATTICE_UNION: &str = "lattice_union_identity";
pub const LATTICE_INTERSECTION: &str = "lattice_intersection_identity";

pub(crate) const LATTICE_REGISTRY: [(&str, &str); 2] = [
    (
        LATTICE_UNION,
        "H_i, U H_i hereditary saturated => I_{U H_i} = sum I_{H_i}",
    ),
    (LATTICE_INTERSECTION, "I_i absorbing => H_{cap I_i} = cap H_{I_i}"),
];

/// `I_{∪H_i} = Σ I_{H_i}` and `H_{∩I_i} = ∩ H_{I_i}` on each family.
pub fn check_lattice_identities<F: Field>(algebra: &EvolutionAlgebra<F>, sample: &LatticeSample<F>) -> PropertyReport {
    let mut report = PropertyReport::new(&LATTICE_REGISTRY);
    report.algebras = 1;
    let sig = algebra_signature(algebra);
    let g = algebra.associated_graph();
    let hs = |h: VertexSet| g.is_hereditary(h) && g.is_saturated(h);
    for family in &sample.set_families {
        let union = family.iter().fold(VertexSet::EMPTY, |u, &h| u.union(h));
        if !family.iter().all(|&h| hs(h)) || !hs(union) {
            continue;
        }
        let lhs = ideal_from_hereditary(algebra, union).expect("checked hereditary");
        let rhs = family.iter().fold(Ideal::zero(algebra), |acc, &h| {
            acc.sum(algebra, &ideal_from_hereditary(algebra, h).expect("checked hereditary"))
        });
        report.check(LATTICE_UNION, lhs == rhs, &sig, || {
            let names: Vec<String> = family.iter().map(|&h| show_set(algebra, h)).collect();
            format!("family [{}]", names.join(", "))
        });
    }
    for family in &sample.ideal_families {
        let members: Vec<&Ideal<F>> = family.iter().filter(|i| has_absorption(algebra, i)).collect();
        if members.is_empty() {
            continue;
        }
        let meet = members
            .iter()
            .skip(1)
            .fold(members[0].clone(), |acc, i| acc.intersect(algebra, i));
        let sets = members
            .iter()
            .fold(VertexSet::full(algebra.dim()), |acc, i| acc.intersection(i.h_set()));
        report.check(LATTICE_INTERSECTION, meet.h_set() == sets, &sig, || {
            let names: Vec<String> = members.iter().map(|i| show_ideal(i)).collect();
            format!("family [{}]", names.join(", "))
        });
    }
    report
}

/// How the algebra side of a simplicity verdict was reached.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SimplicityMethod {
    /// Every subspace over the finite field was tested.
    Exhaustive,
    /// Ideals generated by each basis vector and by random generator sets.
    Sampled { trials: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicityVerdict<F: Field> {
    pub perfect: bool,
    pub graph_simple: bool,
    /// No proper nonzero ideal was found.
    pub algebra_simple: bool,
    pub method: SimplicityMethod,
    /// A proper nonzero ideal, when one was found.
    pub witness: Option<Subspace<F>>,
}

/// Largest `|K|^n` searched exhaustively, together with `n <= 4`.
pub const EXHAUSTIVE_SIMPLICITY_GUARD: u128 = 1 << 12;

/// Searches for a proper nonzero ideal and compares with the graph.
///
/// The two verdicts are proved to agree for perfect algebras only.
pub fn decide_simplicity<F: Field>(
    algebra: &EvolutionAlgebra<F>,
    trials: usize,
    seed: u64,
) -> Result<SimplicityVerdict<F>> {
    let n = algebra.dim();
    let exhaustive = n <= 4
        && algebra
            .field()
            .order()
            .and_then(|q| (q as u128).checked_pow(n as u32))
            .is_some_and(|s| s <= EXHAUSTIVE_SIMPLICITY_GUARD);
    let (method, witness) = if exhaustive {
        let w = oracle::brute_force_ideals(algebra)?
            .into_iter()
            .find(|s| !s.is_zero() && !s.is_full());
        (SimplicityMethod::Exhaustive, w)
    } else {
        let proper = |i: &Ideal<F>| !i.is_zero() && !i.is_whole();
        let mut found = (0..n)
            .map(|k| ideal_closure(algebra, &[algebra.unit(k)]).expect("unit vectors have length n"))
            .find(|i| proper(i));
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            if found.is_some() {
                break;
            }
            let i = random_ideal(algebra, &mut rng);
            if proper(&i) {
                found = Some(i);
            }
        }
        (SimplicityMethod::Sampled { trials }, found.map(Ideal::into_subspace))
    };
    Ok(SimplicityVerdict {
        perfect: algebra.is_perfect(),
        graph_simple: algebra.associated_graph().is_simple(),
        algebra_simple: witness.is_none(),
        method,
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::graph::DEFAULT_ENUMERATION_LIMIT;
    use crate::ideals::ideal_closure;
    use crate::linalg::Vector;
    use crate::scalar::{PrimeField, Rationals};

    fn q(v: &[i64]) -> Vector<Rationals> {
        v.iter().map(|&x| Rationals.from_i64(x)).collect()
    }

    #[test]
    fn empty_set_is_always_adjoint() {
        let a = catalog::six_dim_degenerate(Rationals);
        let i = ideal_closure(&a, &[q(&[0, 0, 1, 0, 0, 0])]).unwrap();
        assert!(check_adjunction(&a, VertexSet::EMPTY, &i, ConnectionMode::Full).unwrap());
    }

    #[test]
    fn perfect_algebra_adjunction_exhaustive() {
        let a = catalog::three_dim_perfect(Rationals);
        let g = a.associated_graph();
        let hs = g.enumerate_hereditary_sets(DEFAULT_ENUMERATION_LIMIT).unwrap();
        assert_eq!(hs.len(), 4);
        let ideals: Vec<_> = hs.iter().map(|&h| ideal_from_hereditary(&a, h).unwrap()).collect();
        let d = ConnectionDomain::new(&a, ConnectionMode::Full, hs, ideals).unwrap();
        assert!(d.adjunction_failures(&a).is_empty());
    }

    #[test]
    fn full_mode_may_fail_without_absorption() {
        let a = catalog::plane_symmetric(Rationals);
        let i = ideal_closure(&a, &[q(&[1, 1])]).unwrap();
        assert_eq!(i.dim(), 1);
        let h = VertexSet::full(2);
        assert!(!check_adjunction(&a, h, &i, ConnectionMode::Full).unwrap());
        assert!(matches!(
            check_adjunction(&a, h, &i, ConnectionMode::Restricted),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            check_adjunction(
                &catalog::plane_chain_to_loop(Rationals),
                VertexSet::singleton(0),
                &i,
                ConnectionMode::Full
            ),
            Err(Error::NotHereditary(_))
        ));
    }

    #[test]
    fn lattice_identities() {
        let a = catalog::three_dim_split(Rationals);
        let sample = LatticeSample {
            set_families: vec![
                vec![VertexSet::EMPTY],
                vec![[0, 1].into_iter().collect(), VertexSet::singleton(2)],
            ],
            ideal_families: vec![],
        };
        let r = check_lattice_identities(&a, &sample);
        assert_eq!(r.get(LATTICE_UNION).unwrap().instances, 2);
        assert!(r.all_hold());

        let p = catalog::three_dim_perfect(Rationals);
        let g = p.associated_graph();
        let all: Vec<_> = g
            .enumerate_hereditary_sets(DEFAULT_ENUMERATION_LIMIT)
            .unwrap()
            .into_iter()
            .map(|h| ideal_from_hereditary(&p, h).unwrap())
            .collect();
        let sample = LatticeSample {
            set_families: vec![],
            ideal_families: vec![all],
        };
        let r = check_lattice_identities(&p, &sample);
        assert_eq!(r.get(LATTICE_INTERSECTION).unwrap().status(), Status::Pass);
    }

    #[test]
    fn simplicity_verdicts() {
        let c = decide_simplicity(&catalog::two_cycle(Rationals), 20, 0).unwrap();
        assert!(c.graph_simple && c.algebra_simple && c.perfect);
        let p = decide_simplicity(&catalog::three_dim_perfect(Rationals), 20, 0).unwrap();
        assert!(!p.graph_simple && !p.algebra_simple);
        let f2 = PrimeField::new(2).unwrap();
        let e = decide_simplicity(&catalog::three_dim_perfect(f2), 0, 0).unwrap();
        assert_eq!(e.method, SimplicityMethod::Exhaustive);
        assert!(!e.algebra_simple);
        let e = decide_simplicity(&catalog::two_cycle(f2), 0, 0).unwrap();
        assert!(e.algebra_simple);
    }
}
