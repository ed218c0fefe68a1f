//! Registry-driven evaluation of every finitely checkable statement about
//! the correspondence on one algebra.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::report::{algebra_signature, show_ideal, show_set, PropertyReport};
use super::{check_adjunction, check_lattice_identities, ConnectionMode, LatticeSample, LATTICE_REGISTRY};
use crate::algebra::EvolutionAlgebra;
use crate::graph::{Digraph, DEFAULT_ENUMERATION_LIMIT};
use crate::ideals::{
    has_absorption, ideal_closure, ideal_from_hereditary, is_maximal_ideal, is_spanned_by_basis_vertices,
    maximal_ideal_cover_check, maximal_ideals_report, Ideal,
};
use crate::linalg::{Subspace, Vector};
use crate::oracle;
use crate::scalar::Field;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    /// Random ideals generated per algebra.
    pub trials: usize,
    pub seed: u64,
    /// Bound on the hereditary enumeration.
    pub limit: usize,
    /// Bound on sets and pairs examined per quantifier; larger families are
    /// sampled.
    pub pair_cap: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            trials: 100,
            seed: 0,
            limit: DEFAULT_ENUMERATION_LIMIT,
            pair_cap: 1024,
        }
    }
}

const HEREDITARY_UNION_INTERSECTION: &str = "hereditary_union_intersection";
const IDEAL_OF_INTERSECTION: &str = "ideal_of_intersection";
const HEREDITARY_OF_INTERSECTION: &str = "hereditary_of_intersection";
const IDEAL_OF_UNION: &str = "ideal_of_union";
const IDEAL_BELOW_CLOSURE: &str = "ideal_below_closure";
const SET_BELOW_CLOSURE: &str = "set_below_closure";
const WHOLE_IDEAL_IFF_FULL_SET: &str = "whole_ideal_iff_full_set";
const CLOSURE_WHOLE_IFF_CONTAINS_SQUARE: &str = "closure_whole_iff_contains_square";
const FIXED_SETS_ARE_SATURATED: &str = "fixed_sets_are_saturated";
const FIXED_SETS_WITH_SINKS: &str = "fixed_sets_with_sinks";
const BASIS_CUT_IS_SATURATED: &str = "basis_cut_is_saturated";
const BASIS_CUT_OF_SET_IDEAL: &str = "basis_cut_of_set_ideal";
const IDEAL_SET_HEREDITARY: &str = "ideal_set_hereditary";
const ABSORPTION_IMPLIES_SATURATED: &str = "absorption_implies_saturated";
const SATURATED_IMPLIES_ABSORPTION: &str = "saturated_implies_absorption";
const ABSORPTION_EQUIVALENCE: &str = "absorption_equivalence";
const PERFECT_IDEALS_BASIC: &str = "perfect_ideals_basic";
const PERFECT_SET_MAP_INJECTIVE: &str = "perfect_set_map_injective";
const MAXIMAL_ABSORBS: &str = "maximal_absorbs";
const MAXIMAL_OFF_SQUARE: &str = "maximal_off_square";
const MAXIMAL_COVER: &str = "maximal_cover";
const PERFECT_MAXIMAL_FROM_SETS: &str = "perfect_maximal_from_sets";
const IDEAL_MAP_STRICTLY_MONOTONE: &str = "ideal_map_strictly_monotone";
const MAPS_MONOTONE: &str = "maps_monotone";
const ADJUNCTION_RESTRICTED: &str = "adjunction_restricted";
const ADJUNCTION_FULL: &str = "adjunction_full";
const QUOTIENT_HEREDITARY_LEMMA: &str = "quotient_hereditary_lemma";
const MAXIMAL_IFF_QUOTIENT_SIMPLE: &str = "maximal_iff_quotient_simple";
const MAXIMAL_QUOTIENT_CONNECTED: &str = "maximal_quotient_connected";
const QUOTIENT_GRAPH: &str = "quotient_graph";
const SIMPLE_IFF_TRIVIAL_LATTICE: &str = "simple_iff_trivial_lattice";
const SIMPLE_GRAPH_STRUCTURE: &str = "simple_graph_structure";
const PERFECT_SIMPLICITY: &str = "perfect_simplicity";
const MAXIMAL_SETS_ARE_MAXIMA: &str = "maximal_sets_are_maxima";
const SATURATED_CLOSURE_MINIMAL: &str = "saturated_closure_minimal";
const TREE_CLOSURE: &str = "tree_closure";
const GENERATING_SET: &str = "generating_set";

/// Every statement the suite evaluates, in report order.
pub const REGISTRY: [(&str, &str); 39] = [
    (
        HEREDITARY_UNION_INTERSECTION,
        "H, H' hereditary => H u H', H n H' hereditary",
    ),
    (IDEAL_OF_INTERSECTION, "I_{H n H'} = I_H n I_{H'}"),
    (HEREDITARY_OF_INTERSECTION, "H_{I n J} = H_I n H_J"),
    (
        IDEAL_OF_UNION,
        "I_{H u H'} = I_H + I_{H'}, a direct sum when H n H' is empty",
    ),
    (IDEAL_BELOW_CLOSURE, "I <= I_{H_I}"),
    (SET_BELOW_CLOSURE, "H <= H_{I_H}"),
    (WHOLE_IDEAL_IFF_FULL_SET, "I_H = A <=> H = E0"),
    (CLOSURE_WHOLE_IFF_CONTAINS_SQUARE, "I_{H_I} = A <=> A^2 <= I"),
    (
        FIXED_SETS_ARE_SATURATED,
        "H_{I_H} = H => H saturated; converse when A is non-degenerate",
    ),
    (
        FIXED_SETS_WITH_SINKS,
        "H_{I_H} = H <=> H saturated and contains every sink",
    ),
    (BASIS_CUT_IS_SATURATED, "H_I = I n B => H_I saturated"),
    (BASIS_CUT_OF_SET_IDEAL, "H = I_H n B"),
    (IDEAL_SET_HEREDITARY, "H_I is hereditary and contains every sink"),
    (ABSORPTION_IMPLIES_SATURATED, "I_H absorbing => H saturated"),
    (
        SATURATED_IMPLIES_ABSORPTION,
        "A non-degenerate, H saturated => I_H absorbing",
    ),
    (ABSORPTION_EQUIVALENCE, "I absorbing <=> H_I = I n B <=> I = I_{H_I}"),
    (
        PERFECT_IDEALS_BASIC,
        "A perfect => I = I_{H_I}, I absorbing, I = span(I n B)",
    ),
    (PERFECT_SET_MAP_INJECTIVE, "A perfect, H_I = H_J => I = J"),
    (
        MAXIMAL_ABSORBS,
        "I maximal, codim I != 1 or A^2 not <= I => I absorbing",
    ),
    (
        MAXIMAL_OFF_SQUARE,
        "I maximal, A^2 not <= I => I absorbing, H_I = I n B saturated",
    ),
    (
        MAXIMAL_COVER,
        "I maximal: T(e) u H_I = E0 for e not in I; codim I != 1 => H_I = I n B",
    ),
    (
        PERFECT_MAXIMAL_FROM_SETS,
        "A perfect => maximal ideals are the I_H, H maximal hereditary, H = H_{I_H}",
    ),
    (
        IDEAL_MAP_STRICTLY_MONOTONE,
        "H < H' => I_H < I_{H'}; H -> I_H injective",
    ),
    (MAPS_MONOTONE, "H <= H' => I_H <= I_{H'}; I <= J => H_I <= H_J"),
    (
        ADJUNCTION_RESTRICTED,
        "A non-degenerate, H saturated, I absorbing => (I_H <= I <=> H <= H_I)",
    ),
    (ADJUNCTION_FULL, "A perfect => (I_H <= I <=> H <= H_I)"),
    LATTICE_REGISTRY[0],
    LATTICE_REGISTRY[1],
    (
        QUOTIENT_HEREDITARY_LEMMA,
        "H <= H' hereditary => H' \\ H hereditary in E/H",
    ),
    (MAXIMAL_IFF_QUOTIENT_SIMPLE, "H maximal hereditary <=> E/H simple"),
    (
        MAXIMAL_QUOTIENT_CONNECTED,
        "H maximal hereditary => E/H is one vertex or strongly connected",
    ),
    (QUOTIENT_GRAPH, "graph of A/I_H = E/H"),
    (
        SIMPLE_IFF_TRIVIAL_LATTICE,
        "E simple <=> the hereditary sets are {} and E0",
    ),
    (
        SIMPLE_GRAPH_STRUCTURE,
        "n >= 2: E simple => no sources, no sinks, strongly connected; E simple <=> spanning closed path",
    ),
    (PERFECT_SIMPLICITY, "A perfect => (A simple <=> E simple)"),
    (
        MAXIMAL_SETS_ARE_MAXIMA,
        "maximal hereditary sets = maxima of the enumerated proper hereditary sets",
    ),
    (
        SATURATED_CLOSURE_MINIMAL,
        "saturated closure of H is the least hereditary saturated superset",
    ),
    (
        TREE_CLOSURE,
        "S <= T(S) = T(T(S)) hereditary; S <= S' => T(S) <= T(S'); T(H) = H",
    ),
    (
        GENERATING_SET,
        "T(S) = E0 for the witness, |S| = source components, no proper subset generates",
    ),
];

/// Statements quantified over the hereditary family.
const NEEDS_FAMILY: [&str; 23] = [
    HEREDITARY_UNION_INTERSECTION,
    IDEAL_OF_INTERSECTION,
    IDEAL_OF_UNION,
    SET_BELOW_CLOSURE,
    WHOLE_IDEAL_IFF_FULL_SET,
    FIXED_SETS_ARE_SATURATED,
    FIXED_SETS_WITH_SINKS,
    BASIS_CUT_OF_SET_IDEAL,
    ABSORPTION_IMPLIES_SATURATED,
    SATURATED_IMPLIES_ABSORPTION,
    IDEAL_MAP_STRICTLY_MONOTONE,
    MAPS_MONOTONE,
    ADJUNCTION_RESTRICTED,
    ADJUNCTION_FULL,
    LATTICE_REGISTRY[0].0,
    QUOTIENT_HEREDITARY_LEMMA,
    MAXIMAL_IFF_QUOTIENT_SIMPLE,
    MAXIMAL_QUOTIENT_CONNECTED,
    QUOTIENT_GRAPH,
    SIMPLE_IFF_TRIVIAL_LATTICE,
    MAXIMAL_SETS_ARE_MAXIMA,
    SATURATED_CLOSURE_MINIMAL,
    PERFECT_SIMPLICITY,
];

/// Largest `|K|^n` for which absorption is also decided by brute force.
const ABSORPTION_ORACLE_SIZE: u128 = 256;

/// The ideal generated by one to three random vectors. Each coordinate is
/// zero with probability one half, otherwise drawn from `-2..=2` over the
/// rationals or uniformly from a finite field.
pub fn random_ideal<F: Field>(algebra: &EvolutionAlgebra<F>, rng: &mut ChaCha8Rng) -> Ideal<F> {
    let f = algebra.field();
    let k = rng.gen_range(1..=3);
    let generators: Vec<Vector<F>> = (0..k)
        .map(|_| {
            (0..algebra.dim())
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        f.zero()
                    } else {
                        match f.order() {
                            Some(q) => f.from_i64(rng.gen_range(0..q) as i64),
                            None => f.from_i64(rng.gen_range(-2..=2)),
                        }
                    }
                })
                .collect()
        })
        .collect();
    ideal_closure(algebra, &generators).expect("generators have length n")
}

/// The suite with the other parameters at their defaults.
pub fn run_theorem_suite<F: Field>(algebra: &EvolutionAlgebra<F>, trials: usize, seed: u64) -> PropertyReport {
    run_theorem_suite_with(
        algebra,
        &SuiteConfig {
            trials,
            seed,
            ..SuiteConfig::default()
        },
    )
}

/// Evaluates the registry on `algebra`; deterministic in the configuration.
pub fn run_theorem_suite_with<F: Field>(algebra: &EvolutionAlgebra<F>, config: &SuiteConfig) -> PropertyReport {
    let mut suite = Suite::new(algebra, config);
    suite.run();
    suite.report
}

/// Runs the suite on each algebra in parallel, the `k`-th with seed
/// `seed + k`, and merges the reports in input order.
pub fn run_suite_batch<F: Field>(algebras: &[EvolutionAlgebra<F>], config: &SuiteConfig) -> PropertyReport {
    let reports: Vec<PropertyReport> = algebras
        .par_iter()
        .enumerate()
        .map(|(k, a)| {
            let cfg = SuiteConfig {
                seed: config.seed.wrapping_add(k as u64),
                ..config.clone()
            };
            run_theorem_suite_with(a, &cfg)
        })
        .collect();
    let mut total = PropertyReport::new(&REGISTRY);
    for r in &reports {
        total.merge(r);
    }
    total
}

struct Suite<'a, F: Field> {
    a: &'a EvolutionAlgebra<F>,
    cfg: &'a SuiteConfig,
    g: Digraph,
    full: VertexSet,
    perfect: bool,
    degenerate: bool,
    a2: Subspace<F>,
    sig: String,
    rng: ChaCha8Rng,
    report: PropertyReport,
    /// The full hereditary family, when it could be enumerated.
    family: Option<Vec<VertexSet>>,
    /// Sets examined, with their ideals.
    sets: Vec<(VertexSet, Ideal<F>)>,
    maximal_sets: Vec<VertexSet>,
    /// Random ideals, closures of basis vectors and some `I_H`.
    pool: Vec<Ideal<F>>,
}

impl<'a, F: Field> Suite<'a, F> {
    fn new(a: &'a EvolutionAlgebra<F>, cfg: &'a SuiteConfig) -> Self {
        let g = a.associated_graph();
        let mut report = PropertyReport::new(&REGISTRY);
        report.algebras = 1;
        Suite {
            full: g.vertices(),
            maximal_sets: g.maximal_hereditary_sets(),
            perfect: a.is_perfect(),
            degenerate: a.is_degenerate(),
            a2: a.a_squared(),
            sig: algebra_signature(a),
            rng: ChaCha8Rng::seed_from_u64(cfg.seed),
            report,
            family: None,
            sets: Vec::new(),
            pool: Vec::new(),
            g,
            a,
            cfg,
        }
    }

    fn check(&mut self, name: &str, holds: bool, detail: impl FnOnce() -> String) {
        self.report.check(name, holds, &self.sig, detail);
    }

    /// Indices `0..len`, all of them or a sorted random sample of `pair_cap`.
    fn sample_indices(&mut self, len: usize) -> Vec<usize> {
        if len <= self.cfg.pair_cap {
            return (0..len).collect();
        }
        let mut v = sample(&mut self.rng, len, self.cfg.pair_cap).into_vec();
        v.sort_unstable();
        v
    }

    /// Ordered pairs from `0..len`, all of them or `pair_cap` random ones.
    fn pairs(&mut self, len: usize) -> Vec<(usize, usize)> {
        if len.saturating_mul(len) <= self.cfg.pair_cap {
            return (0..len).flat_map(|i| (0..len).map(move |j| (i, j))).collect();
        }
        (0..self.cfg.pair_cap)
            .map(|_| (self.rng.gen_range(0..len), self.rng.gen_range(0..len)))
            .collect()
    }

    fn run(&mut self) {
        self.prepare();
        self.set_statements();
        self.ideal_statements();
        self.maximal_statements();
        self.connection_statements();
        self.graph_statements();
    }

    fn prepare(&mut self) {
        match self.g.enumerate_hereditary_sets(self.cfg.limit) {
            Ok(family) => {
                let picks = self.sample_indices(family.len());
                self.sets = picks
                    .iter()
                    .map(|&k| {
                        (
                            family[k],
                            ideal_from_hereditary(self.a, family[k]).expect("enumerated sets are hereditary"),
                        )
                    })
                    .collect();
                self.family = Some(family);
            }
            Err(e) => {
                let notice = e.to_string();
                for name in NEEDS_FAMILY {
                    self.report.skip(name, &notice);
                }
            }
        }
        for _ in 0..self.cfg.trials {
            let i = random_ideal(self.a, &mut self.rng);
            self.pool.push(i);
        }
        for k in 0..self.a.dim() {
            let i = ideal_closure(self.a, &[self.a.unit(k)]).expect("unit vectors have length n");
            self.pool.push(i);
        }
        let extra: Vec<Ideal<F>> = self.sets.iter().take(32).map(|(_, i)| i.clone()).collect();
        self.pool.extend(extra);
    }

    fn set_statements(&mut self) {
        let a = self.a;
        let Some(family) = self.family.clone() else {
            return;
        };
        let saturated: Vec<VertexSet> = family.iter().copied().filter(|&h| self.g.is_saturated(h)).collect();
        let sets = self.sets.clone();
        let sinks = self.g.sinks();
        let mut quotients: Vec<Option<Digraph>> = Vec::with_capacity(sets.len());
        for (h, ih) in &sets {
            let h = *h;
            self.check(SET_BELOW_CLOSURE, h.is_subset(ih.h_set()), || {
                format!("H={}", show_set(a, h))
            });
            self.check(WHOLE_IDEAL_IFF_FULL_SET, ih.is_whole() == (h == self.full), || {
                format!("H={}", show_set(a, h))
            });
            let sat = self.g.is_saturated(h);
            let fixed = ih.h_set() == h;
            let forward = !fixed || sat;
            let converse = self.degenerate || !sat || fixed;
            self.check(FIXED_SETS_ARE_SATURATED, forward && converse, || {
                format!("H={}", show_set(a, h))
            });
            let with_sinks = sat && sinks.is_subset(h);
            self.check(FIXED_SETS_WITH_SINKS, fixed == with_sinks, || {
                format!("H={}", show_set(a, h))
            });
            self.check(BASIS_CUT_OF_SET_IDEAL, ih.basis_vertices() == h, || {
                format!("H={}", show_set(a, h))
            });
            let absorbs = has_absorption(self.a, ih);
            if absorbs {
                self.check(ABSORPTION_IMPLIES_SATURATED, sat, || format!("H={}", show_set(a, h)));
            }
            if !self.degenerate && sat {
                self.check(SATURATED_IMPLIES_ABSORPTION, absorbs, || {
                    format!("H={}", show_set(a, h))
                });
            }
            let t = self.g.tree(h).expect("in range");
            self.check(TREE_CLOSURE, t == h, || format!("T(H) != H for H={}", show_set(a, h)));

            let c = self.g.saturated_closure(h).expect("hereditary");
            let least = saturated.iter().filter(|k| h.is_subset(**k)).all(|k| c.is_subset(*k));
            let ok = self.g.is_hereditary(c) && self.g.is_saturated(c) && h.is_subset(c) && least;
            self.check(SATURATED_CLOSURE_MINIMAL, ok, || {
                format!("H={}, closure={}", show_set(a, h), show_set(a, c))
            });

            if h == self.full {
                quotients.push(None);
                continue;
            }
            let qg = self.g.quotient(h).expect("hereditary");
            let qa = self.a.quotient_algebra(h).expect("hereditary").expect("proper");
            self.check(QUOTIENT_GRAPH, qa.associated_graph() == qg, || {
                format!("H={}", show_set(a, h))
            });
            let maximal = self.maximal_sets.contains(&h);
            self.check(MAXIMAL_IFF_QUOTIENT_SIMPLE, maximal == qg.is_simple(), || {
                format!("H={}", show_set(a, h))
            });
            if maximal {
                self.check(
                    MAXIMAL_QUOTIENT_CONNECTED,
                    qg.n() == 1 || qg.is_strongly_connected(),
                    || format!("H={}", show_set(a, h)),
                );
            }
            quotients.push(Some(qg));
        }
        let trivial = family == [VertexSet::EMPTY, self.full];
        self.check(SIMPLE_IFF_TRIVIAL_LATTICE, self.g.is_simple() == trivial, || {
            format!("{} hereditary sets", family.len())
        });
        if family.len() <= 4096 {
            let proper: Vec<VertexSet> = family.iter().copied().filter(|&h| h != self.full).collect();
            let mut maxima: Vec<VertexSet> = proper
                .iter()
                .copied()
                .filter(|&h| !proper.iter().any(|&k| k != h && h.is_subset(k)))
                .collect();
            maxima.sort();
            let reported = self.maximal_sets.clone();
            self.check(MAXIMAL_SETS_ARE_MAXIMA, maxima == reported, || {
                let m: Vec<String> = reported.iter().map(|&h| show_set(a, h)).collect();
                format!("reported [{}]", m.join(", "))
            });
        } else {
            self.report.skip(
                MAXIMAL_SETS_ARE_MAXIMA,
                "hereditary family too large for the quadratic check",
            );
        }

        for (x, y) in self.pairs(sets.len()) {
            let ((h, ih), (k, ik)) = (&sets[x], &sets[y]);
            let (h, k) = (*h, *k);
            let both = || format!("H={}, H'={}", show_set(a, h), show_set(a, k));
            let (u, m) = (h.union(k), h.intersection(k));
            self.check(
                HEREDITARY_UNION_INTERSECTION,
                self.g.is_hereditary(u) && self.g.is_hereditary(m),
                both,
            );
            let im = ideal_from_hereditary(self.a, m).expect("hereditary");
            self.check(IDEAL_OF_INTERSECTION, im == ih.intersect(self.a, ik), both);
            let iu = ideal_from_hereditary(self.a, u).expect("hereditary");
            let sum = ih.sum(self.a, ik);
            let direct = !h.is_disjoint(k) || sum.dim() == ih.dim() + ik.dim();
            self.check(IDEAL_OF_UNION, iu == sum && direct, both);
            if h.is_subset(k) {
                self.check(MAPS_MONOTONE, ih.is_subideal_of(ik), both);
                if h != k {
                    self.check(
                        IDEAL_MAP_STRICTLY_MONOTONE,
                        ih.is_subideal_of(ik) && ih.dim() < ik.dim(),
                        both,
                    );
                }
                if let Some(qg) = &quotients[x] {
                    let rest = self.g.quotient_index(h, k.difference(h));
                    self.check(QUOTIENT_HEREDITARY_LEMMA, qg.is_hereditary(rest), both);
                }
            }
            if h != k {
                self.check(IDEAL_MAP_STRICTLY_MONOTONE, ih != ik, both);
            }
        }

        if self.degenerate {
            self.report.not_applicable(LATTICE_REGISTRY[0].0);
            self.report.not_applicable(LATTICE_REGISTRY[1].0);
        } else {
            let picks = self.sample_indices(saturated.len());
            let sat: Vec<VertexSet> = picks.iter().map(|&k| saturated[k]).collect();
            let mut set_families = vec![vec![VertexSet::EMPTY]];
            for (x, y) in self.pairs(sat.len()) {
                set_families.push(vec![sat[x], sat[y]]);
            }
            for _ in 0..self.cfg.pair_cap.min(sat.len() * sat.len()) / 4 {
                let t: Vec<VertexSet> = (0..3).map(|_| sat[self.rng.gen_range(0..sat.len())]).collect();
                set_families.push(t);
            }
            let mut ideal_families: Vec<Vec<Ideal<F>>> = vec![self.pool.clone()];
            for (x, y) in self.pairs(self.pool.len()) {
                ideal_families.push(vec![self.pool[x].clone(), self.pool[y].clone()]);
            }
            let mut sub = check_lattice_identities(
                self.a,
                &LatticeSample {
                    set_families,
                    ideal_families,
                },
            );
            sub.algebras = 0;
            self.report.merge(&sub);
        }
    }

    fn ideal_statements(&mut self) {
        let pool = self.pool.clone();
        let sinks = self.g.sinks();
        let oracle_ok = self
            .a
            .field()
            .order()
            .and_then(|q| (q as u128).checked_pow(self.a.dim() as u32))
            .is_some_and(|s| s <= ABSORPTION_ORACLE_SIZE);
        for i in &pool {
            let show = || format!("I={}", show_ideal(i));
            let hi = i.h_set();
            let closure = ideal_from_hereditary(self.a, hi).expect("H_I is hereditary");
            self.check(IDEAL_BELOW_CLOSURE, i.is_subideal_of(&closure), show);
            let contains_square = self.a2.is_subspace_of(i.subspace()).expect("same algebra");
            self.check(
                CLOSURE_WHOLE_IFF_CONTAINS_SQUARE,
                closure.is_whole() == contains_square,
                show,
            );
            let cut = i.basis_vertices();
            if hi == cut {
                self.check(BASIS_CUT_IS_SATURATED, self.g.is_saturated(hi), show);
            }
            self.check(
                IDEAL_SET_HEREDITARY,
                self.g.is_hereditary(hi) && sinks.is_subset(hi),
                show,
            );
            let absorbs = has_absorption(self.a, i);
            let mut agree = absorbs == (hi == cut) && absorbs == (*i == closure);
            if oracle_ok {
                agree &= oracle::brute_force_absorption(self.a, i.subspace()).expect("within the guard") == absorbs;
            }
            self.check(ABSORPTION_EQUIVALENCE, agree, show);
            if self.perfect {
                let ok = *i == closure && absorbs && is_spanned_by_basis_vertices(self.a, i);
                self.check(PERFECT_IDEALS_BASIC, ok, show);
            }
        }
        if !self.perfect {
            self.report.not_applicable(PERFECT_IDEALS_BASIC);
            self.report.not_applicable(PERFECT_SET_MAP_INJECTIVE);
        }
        for (x, y) in self.pairs(pool.len()) {
            let (i, j) = (&pool[x], &pool[y]);
            let both = || format!("I={}, J={}", show_ideal(i), show_ideal(j));
            let meet = i.intersect(self.a, j);
            self.check(
                HEREDITARY_OF_INTERSECTION,
                meet.h_set() == i.h_set().intersection(j.h_set()),
                both,
            );
            if i.is_subideal_of(j) {
                self.check(MAPS_MONOTONE, i.h_set().is_subset(j.h_set()), both);
            }
            if self.perfect && i.h_set() == j.h_set() {
                self.check(PERFECT_SET_MAP_INJECTIVE, i == j, both);
            }
        }
    }

    fn maximal_statements(&mut self) {
        let a = self.a;
        let report = maximal_ideals_report(self.a, self.cfg.pair_cap);
        let mut maximal: Vec<Ideal<F>> = report
            .explicit_maximal_ideals()
            .into_iter()
            .map(|s| Ideal::new(self.a, s).expect("reported maximal ideals are ideals"))
            .collect();
        for i in &self.pool {
            if !i.is_whole() && is_maximal_ideal(self.a, i).expect("proper") && !maximal.contains(i) {
                maximal.push(i.clone());
            }
        }
        for m in &maximal {
            let show = || format!("I={}", show_ideal(m));
            let absorbs = has_absorption(self.a, m);
            let contains_square = self.a2.is_subspace_of(m.subspace()).expect("same algebra");
            if m.codim() != 1 || !contains_square {
                self.check(MAXIMAL_ABSORBS, absorbs, show);
            }
            if !contains_square {
                let hi = m.h_set();
                let ok = absorbs && hi == m.basis_vertices() && self.g.is_saturated(hi);
                self.check(MAXIMAL_OFF_SQUARE, ok, show);
            }
            let cover = maximal_ideal_cover_check(self.a, m).unwrap_or(false);
            self.check(MAXIMAL_COVER, cover, show);
            if self.perfect {
                let hi = m.h_set();
                let from_set = ideal_from_hereditary(self.a, hi).expect("hereditary");
                self.check(
                    PERFECT_MAXIMAL_FROM_SETS,
                    *m == from_set && self.maximal_sets.contains(&hi),
                    show,
                );
            }
        }
        if self.perfect {
            for c in &report.candidates {
                let ok = c.criterion.is_some() && c.ideal.h_set() == c.h;
                let h = c.h;
                self.check(PERFECT_MAXIMAL_FROM_SETS, ok, || format!("H={}", show_set(a, h)));
            }
        } else {
            self.report.not_applicable(PERFECT_MAXIMAL_FROM_SETS);
        }
    }

    fn connection_statements(&mut self) {
        let a = self.a;
        if self.family.is_none() {
            return;
        }
        if !self.perfect {
            self.report.not_applicable(ADJUNCTION_FULL);
        }
        if self.degenerate {
            self.report.not_applicable(ADJUNCTION_RESTRICTED);
        }
        let sets = self.sets.clone();
        let pool = self.pool.clone();
        let absorbing: Vec<bool> = pool.iter().map(|i| has_absorption(self.a, i)).collect();
        let total = sets.len() * pool.len();
        let picks = self.sample_indices(total);
        for k in picks {
            let (h, _) = sets[k / pool.len()];
            let i = &pool[k % pool.len()];
            let show = || format!("H={}, I={}", show_set(a, h), show_ideal(i));
            if self.perfect {
                let ok = check_adjunction(self.a, h, i, ConnectionMode::Full).expect("hereditary");
                self.check(ADJUNCTION_FULL, ok, show);
            }
            if !self.degenerate && absorbing[k % pool.len()] && self.g.is_saturated(h) {
                let ok = check_adjunction(self.a, h, i, ConnectionMode::Restricted).expect("admitted");
                self.check(ADJUNCTION_RESTRICTED, ok, show);
            }
        }
    }

    fn graph_statements(&mut self) {
        let a = self.a;
        let n = self.a.dim();
        let simple = self.g.is_simple();
        if n >= 2 {
            let structure =
                !simple || (self.g.sources().is_empty() && self.g.sinks().is_empty() && self.g.is_strongly_connected());
            let ok = structure && simple == self.g.has_spanning_closed_path();
            self.check(SIMPLE_GRAPH_STRUCTURE, ok, || format!("simple={simple}"));
        } else {
            self.report.not_applicable(SIMPLE_GRAPH_STRUCTURE);
        }

        if self.perfect {
            if self.family.is_some() {
                let found = self.pool.iter().find(|i| !i.is_zero() && !i.is_whole()).cloned();
                let ok = simple == found.is_none();
                self.check(PERFECT_SIMPLICITY, ok, || match &found {
                    Some(i) => format!("graph simple but ideal {} is proper", show_ideal(i)),
                    None => "graph not simple but no proper ideal found".to_string(),
                });
            }
        } else {
            self.report.not_applicable(PERFECT_SIMPLICITY);
        }

        let gen = self.g.minimal_generating_set();
        let sources = self.g.condensation().sources().count();
        let reaches = |s: VertexSet| self.g.tree(s).expect("in range") == self.full;
        let minimal = gen.witness.iter().all(|v| {
            let mut s = gen.witness;
            s.remove(v);
            !reaches(s)
        });
        let ok = reaches(gen.witness) && gen.min_size == sources && minimal;
        self.check(GENERATING_SET, ok, || format!("witness {}", show_set(a, gen.witness)));

        for _ in 0..8 {
            let bits = self.rng.gen::<u64>() & self.full.bits();
            let more = self.rng.gen::<u64>() & self.full.bits();
            let (s, s2) = (VertexSet::from_bits(bits), VertexSet::from_bits(bits | more));
            let t = self.g.tree(s).expect("in range");
            let ok = s.is_subset(t)
                && self.g.tree(t).expect("in range") == t
                && self.g.is_hereditary(t)
                && t.is_subset(self.g.tree(s2).expect("in range"));
            self.check(TREE_CLOSURE, ok, || {
                format!("S={}, S'={}", show_set(a, s), show_set(a, s2))
            });
        }
    }
}
