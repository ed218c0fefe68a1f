use evoalg::oracle::{AlgebraSampler, RandomSpec};
use evoalg::{EvolutionAlgebra, Field, PrimeField, Rationals};
use evoalg_cli::commands;
use evoalg_cli::document::{AlgebraDocument, AnyAlgebra};

fn quotient_round_trip<F: Field>(field: F, seed: u64, wrap: fn(EvolutionAlgebra<F>) -> AnyAlgebra) {
    let dir = tempfile::tempdir().unwrap();
    let mut sampler = AlgebraSampler::new(field, RandomSpec::new(1..=5, seed).with_density(0.4));
    let mut checked = 0;
    for k in 0..40 {
        let a = sampler.next_algebra();
        let src = dir.path().join(format!("a{k}.json"));
        std::fs::write(&src, AlgebraDocument::from_algebra(&a).to_json()).unwrap();
        for h in a.associated_graph().enumerate_hereditary_sets(1 << 10).unwrap() {
            let Some(expected) = a.quotient_algebra(h).unwrap() else {
                continue;
            };
            let out = dir.path().join("q.json");
            let set = h.display(a.labels()).to_string();
            let run = evoalg_cli::run([
                "evoalg",
                "quotient",
                src.to_str().unwrap(),
                "--set",
                &set,
                "--out",
                out.to_str().unwrap(),
            ]);
            assert_eq!(run.code, 0, "{}", run.stderr);

            let reparsed = AlgebraDocument::read(out.to_str().unwrap())
                .unwrap()
                .to_algebra()
                .unwrap();
            assert_eq!(reparsed, wrap(expected.clone()));
            let via_file = evoalg_cli::run(["evoalg", "analyze", out.to_str().unwrap(), "--json"]);
            let in_process = serde_json::to_string_pretty(&commands::analyze(&expected).value).unwrap() + "\n";
            assert_eq!(via_file.stdout, in_process);
            checked += 1;
        }
    }
    assert!(checked > 40);
}

#[test]
fn quotient_documents_reparse_to_the_in_process_quotient() {
    quotient_round_trip(Rationals, 1, AnyAlgebra::Rational);
    quotient_round_trip(PrimeField::new(3).unwrap(), 2, AnyAlgebra::Prime);
}

#[test]
fn documents_round_trip() {
    let mut sampler = AlgebraSampler::new(Rationals, RandomSpec::new(1..=6, 5).with_pool(vec![-3, 1, 2]));
    for _ in 0..50 {
        let a = sampler.next_algebra();
        let doc = AlgebraDocument::from_algebra(&a);
        let back = AlgebraDocument::parse(&doc.to_json()).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_algebra().unwrap(), AnyAlgebra::Rational(a));
    }
}

#[test]
fn fractions_and_custom_labels_survive() {
    let text = r#"{"field": "Q", "dim": 2, "basis": ["u", "v"], "squares": {"v": {"u": "-6/4", "v": "+2"}}}"#;
    let any = AlgebraDocument::parse(text).unwrap().to_algebra().unwrap();
    let doc = any.to_document();
    assert_eq!(doc.squares["v"]["u"], "-3/2");
    assert_eq!(doc.squares["v"]["v"], "2");
    assert!(!doc.squares.contains_key("u"));
    assert_eq!(
        AlgebraDocument::parse(&doc.to_json()).unwrap().to_algebra().unwrap(),
        any
    );
}
