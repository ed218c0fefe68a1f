use evoalg::galois::decide_simplicity;
use evoalg::ideals::{absorber, has_absorption, is_ideal, is_maximal_ideal, maximal_ideals_report, Ideal};
use evoalg::oracle::{self, AlgebraSampler, RandomSpec};
use evoalg::{catalog, EvolutionAlgebra, PrimeField, DEFAULT_ENUMERATION_LIMIT};

fn agree(a: &EvolutionAlgebra<PrimeField>) {
    let ideals = oracle::brute_force_ideals(a).unwrap();
    let maximal = oracle::brute_force_maximal_ideals(a).unwrap();
    for s in oracle::enumerate_subspaces(a.field(), a.dim()).unwrap() {
        assert_eq!(is_ideal(a, &s), ideals.contains(&s));
    }
    for s in &ideals {
        let i = Ideal::new(a, s.clone()).unwrap();
        let absorbs = oracle::brute_force_absorption(a, s).unwrap();
        assert_eq!(has_absorption(a, &i), absorbs);
        assert_eq!(absorber(a, &i) == *s, absorbs);
        match oracle::brute_force_absorption_witness(a, s).unwrap() {
            Some(x) => assert!(!absorbs && !s.contains(&x).unwrap()),
            None => assert!(absorbs),
        }
        if !i.is_whole() {
            assert_eq!(is_maximal_ideal(a, &i).unwrap(), maximal.contains(s));
        }
    }
    let g = a.associated_graph();
    assert_eq!(
        g.enumerate_hereditary_sets(DEFAULT_ENUMERATION_LIMIT).unwrap(),
        oracle::brute_force_hereditary(&g).unwrap()
    );
    assert_eq!(
        g.maximal_hereditary_sets(),
        oracle::brute_force_maximal_hereditary(&g).unwrap()
    );

    // Every listed maximal ideal is one, and over a finite field the list is complete.
    let report = maximal_ideals_report(a, DEFAULT_ENUMERATION_LIMIT);
    let mut listed = report.explicit_maximal_ideals();
    listed.sort_by_key(|s| s.format_basis());
    let mut expected = maximal.clone();
    expected.sort_by_key(|s| s.format_basis());
    assert_eq!(listed, expected, "{}", evoalg::galois::algebra_signature(a));
}

#[test]
fn fast_paths_match_the_oracle_over_f3() {
    let mut s = AlgebraSampler::new(PrimeField::new(3).unwrap(), RandomSpec::new(1..=3, 11));
    for _ in 0..80 {
        agree(&s.next_algebra());
    }
}

#[test]
fn fast_paths_match_the_oracle_over_f5() {
    let mut s = AlgebraSampler::new(
        PrimeField::new(5).unwrap(),
        RandomSpec::new(1..=2, 12).with_density(0.7),
    );
    for _ in 0..60 {
        agree(&s.next_algebra());
    }
}

#[test]
fn catalog_over_small_fields() {
    for p in [2, 3] {
        let f = PrimeField::new(p).unwrap();
        for a in [
            catalog::six_dim_degenerate(f),
            catalog::three_dim_perfect(f),
            catalog::plane_antisymmetric(f),
            catalog::plane_chain_to_loop(f),
            catalog::plane_symmetric(f),
            catalog::three_dim_split(f),
            catalog::four_dim_non_maximal(f),
            catalog::four_dim_degenerate(f),
            catalog::four_dim_codim_one(f),
            catalog::three_dim_non_injective(f),
            catalog::two_cycle(f),
        ] {
            if p == 3 && a.dim() == 6 {
                continue;
            }
            agree(&a);
        }
    }
}

#[test]
fn perfect_simplicity_matches_graph_over_f3() {
    let mut s = AlgebraSampler::new(PrimeField::new(3).unwrap(), RandomSpec::new(2..=3, 13));
    for k in 0..40 {
        let a = s.next_perfect().unwrap();
        let v = decide_simplicity(&a, 50, k).unwrap();
        assert_eq!(v.algebra_simple, v.graph_simple);
    }
}
