use evoalg::ideals::{hereditary_from_ideal, ideal_closure, ideal_from_hereditary, is_ideal};
use evoalg::linalg::{rref, Subspace, Vector};
use evoalg::oracle::{enumerate_subspaces, AlgebraSampler, RandomSpec};
use evoalg::{EvolutionAlgebra, Field, PrimeField, Rationals, VertexSet};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = BigRational> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn prime() -> impl Strategy<Value = PrimeField> {
    prop::sample::select(vec![2u64, 3, 5, 7, 101, 2_147_483_647]).prop_map(|p| PrimeField::new(p).unwrap())
}

fn residues(f: &PrimeField, raw: &[u64]) -> Vec<u32> {
    raw.iter().map(|&x| f.from_i64((x % (1 << 40)) as i64)).collect()
}

fn vectors(n: usize, k: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(-2i64..=2, n), 0..=k)
}

fn to_field<F: Field>(f: &F, vs: &[Vec<i64>]) -> Vec<Vector<F>> {
    vs.iter().map(|v| v.iter().map(|&x| f.from_i64(x)).collect()).collect()
}

fn field_axioms<F: Field>(f: &F, a: &F::Elem, b: &F::Elem, c: &F::Elem) {
    assert_eq!(f.add(a, b), f.add(b, a));
    assert_eq!(f.mul(a, b), f.mul(b, a));
    assert_eq!(f.add(&f.add(a, b), c), f.add(a, &f.add(b, c)));
    assert_eq!(f.mul(&f.mul(a, b), c), f.mul(a, &f.mul(b, c)));
    assert_eq!(f.mul(a, &f.add(b, c)), f.add(&f.mul(a, b), &f.mul(a, c)));
    assert_eq!(f.add(a, &f.zero()), *a);
    assert_eq!(f.mul(a, &f.one()), *a);
    assert!(f.is_zero(&f.add(a, &f.neg(a))));
    assert_eq!(f.sub(a, b), f.add(a, &f.neg(b)));
    match f.inv(a) {
        Some(i) => assert!(f.is_one(&f.mul(a, &i))),
        None => assert!(f.is_zero(a)),
    }
    assert_eq!(f.parse(&f.format(a)).unwrap(), *a);
}

proptest! {
    #[test]
    fn rational_field_axioms(a in rational(), b in rational(), c in rational()) {
        field_axioms(&Rationals, &a, &b, &c);
    }

    #[test]
    fn prime_field_axioms(f in prime(), raw in prop::collection::vec(any::<u64>(), 3)) {
        let r = residues(&f, &raw);
        field_axioms(&f, &r[0], &r[1], &r[2]);
    }

    #[test]
    fn rref_is_idempotent(vs in vectors(5, 6)) {
        let f = Rationals;
        let s = rref(&f, 5, &to_field(&f, &vs)).unwrap();
        let again = rref(&f, 5, s.basis()).unwrap();
        prop_assert_eq!(&again, &s);
        for v in to_field(&f, &vs) {
            prop_assert!(s.contains(&v).unwrap());
        }
    }

    #[test]
    fn dimension_formula(u in vectors(5, 4), w in vectors(5, 4), p in prop::sample::select(vec![0u64, 2, 3])) {
        fn check<F: Field>(f: F, u: &[Vec<i64>], w: &[Vec<i64>]) {
            let u = rref(&f, 5, &to_field(&f, u)).unwrap();
            let w = rref(&f, 5, &to_field(&f, w)).unwrap();
            let sum = u.sum(&w).unwrap();
            let meet = u.intersect(&w).unwrap();
            assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
            assert!(meet.is_subspace_of(&u).unwrap() && meet.is_subspace_of(&w).unwrap());
            assert!(u.is_subspace_of(&sum).unwrap() && w.is_subspace_of(&sum).unwrap());
        }
        if p == 0 {
            check(Rationals, &u, &w);
        } else {
            check(PrimeField::new(p).unwrap(), &u, &w);
        }
    }

    #[test]
    fn membership_matches_span_enumeration(vs in prop::collection::vec(prop::collection::vec(0i64..2, 4), 0..=4)) {
        let f = PrimeField::new(2).unwrap();
        let gens = to_field(&f, &vs);
        let s = rref(&f, 4, &gens).unwrap();
        let mut span = std::collections::HashSet::new();
        for mask in 0u32..(1 << gens.len()) {
            let mut v = vec![0u32; 4];
            for (k, g) in gens.iter().enumerate() {
                if mask >> k & 1 == 1 {
                    for (x, y) in v.iter_mut().zip(g) {
                        *x ^= y;
                    }
                }
            }
            span.insert(v);
        }
        prop_assert_eq!(span.len(), 1 << s.dim());
        for code in 0u32..16 {
            let v: Vec<u32> = (0..4).map(|i| code >> i & 1).collect();
            prop_assert_eq!(s.contains(&v).unwrap(), span.contains(&v));
        }
    }

    #[test]
    fn tree_is_a_monotone_closure(seed in any::<u64>(), s in any::<u64>(), t in any::<u64>()) {
        let mut sampler = AlgebraSampler::new(Rationals, RandomSpec::new(1..=8, seed).with_density(0.3));
        let a = sampler.next_algebra();
        let g = a.associated_graph();
        let full = VertexSet::full(a.dim());
        let s = VertexSet::from_bits(s).intersection(full);
        let t = VertexSet::from_bits(t).intersection(full).union(s);
        let ts = g.tree(s).unwrap();
        prop_assert!(s.is_subset(ts));
        prop_assert!(ts.is_subset(g.tree(t).unwrap()));
        prop_assert_eq!(g.tree(ts).unwrap(), ts);
        prop_assert!(g.is_hereditary(ts));
        let closure = g.saturated_closure(ts).unwrap();
        prop_assert!(g.is_hereditary(closure) && g.is_saturated(closure));
    }

    #[test]
    fn product_is_commutative_and_bilinear(
        seed in any::<u64>(),
        x in prop::collection::vec(-3i64..=3, 4),
        y in prop::collection::vec(-3i64..=3, 4),
        z in prop::collection::vec(-3i64..=3, 4),
        c in -3i64..=3,
    ) {
        let f = Rationals;
        let mut sampler = AlgebraSampler::new(f, RandomSpec::new(4..=4, seed));
        let a = sampler.next_algebra();
        let v = to_field(&f, &[x, y, z]);
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        let c = f.from_i64(c);
        let lin: Vector<Rationals> = x.iter().zip(z).map(|(p, q)| f.add(&f.mul(&c, p), q)).collect();
        let lhs = a.product(&lin, y).unwrap();
        let xy = a.product(x, y).unwrap();
        let zy = a.product(z, y).unwrap();
        let rhs: Vector<Rationals> = xy.iter().zip(&zy).map(|(p, q)| f.add(&f.mul(&c, p), q)).collect();
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(a.product(x, y).unwrap(), a.product(y, x).unwrap());
    }

    #[test]
    fn closures_are_ideals_with_hereditary_sets(seed in any::<u64>(), gens in vectors(4, 2)) {
        let f = PrimeField::new(3).unwrap();
        let mut sampler = AlgebraSampler::new(f, RandomSpec::new(4..=4, seed));
        let a = sampler.next_algebra();
        let gens = to_field(&f, &gens);
        let i = ideal_closure(&a, &gens).unwrap();
        prop_assert!(is_ideal(&a, i.subspace()));
        for g in &gens {
            prop_assert!(i.contains(g).unwrap());
        }
        let h = hereditary_from_ideal(&i);
        let g = a.associated_graph();
        prop_assert!(g.is_hereditary(h));
        let ih = ideal_from_hereditary(&a, h).unwrap();
        prop_assert!(is_ideal(&a, ih.subspace()));
        // H_{I_H} adds exactly the vertices whose out-neighbours all lie in H.
        let back = hereditary_from_ideal(&ih);
        prop_assert!(h.is_subset(back));
        for v in back.difference(h) {
            prop_assert!(g.out_set(v).is_subset(h));
        }
    }
}

#[test]
fn subspace_counts_are_gaussian_binomial_sums() {
    // Number of subspaces of F_q^n, summed over dimensions.
    fn galois_number(q: u128, n: usize) -> u128 {
        let mut g = vec![1u128];
        for m in 1..=n {
            let mut next = vec![1u128; m + 1];
            for k in 1..m {
                next[k] = g[k - 1] + q.pow(k as u32) * g[k];
            }
            g = next;
        }
        g.iter().sum()
    }
    for (p, n) in [(2u64, 1), (2, 5), (3, 3), (5, 2), (7, 2)] {
        let f = PrimeField::new(p).unwrap();
        let subs: Vec<Subspace<PrimeField>> = enumerate_subspaces(&f, n).unwrap().collect();
        assert_eq!(subs.len() as u128, galois_number(p as u128, n), "F{p}^{n}");
    }
    assert!(enumerate_subspaces(&Rationals, 2).is_err());
}

#[test]
fn document_scale_dimension() {
    let f = Rationals;
    let squares: Vec<Vector<Rationals>> = (0..64)
        .map(|i| (0..64).map(|j| f.from_i64(((i + 1) % 64 == j) as i64)).collect())
        .collect();
    let a = EvolutionAlgebra::new(f, squares).unwrap();
    assert!(a.associated_graph().is_strongly_connected());
    assert!(a.is_perfect());
}
