use proptest::prelude::*;
use proptest::test_runner::Config;
use siggb_core::bench::{cyclic, katsura};
use siggb_core::engine::{gbgc, gbgc_until, Criterion, EngineConfig, ModuleOrderChoice};
use siggb_core::oracle::{buchberger, gb_equal, is_groebner, reduce_gb, sgb_spotcheck};
use siggb_core::pairs::Strategy as PairStrategy;
use siggb_core::{Error, Monomial, Polynomial, PrimeField, Ring, TermOrder};

const CRITERIA: [Criterion; 4] = [
    Criterion::None,
    Criterion::F5,
    Criterion::Ratio,
    Criterion::Gvw,
];
const STRATEGIES: [PairStrategy; 3] = [
    PairStrategy::MinimalSignature,
    PairStrategy::MinimalDegree,
    PairStrategy::Fifo,
];

fn gf(p: u64) -> PrimeField {
    PrimeField::new(p).unwrap()
}

fn configs(criteria: &[Criterion]) -> Vec<EngineConfig> {
    let mut out = Vec::new();
    for &c in criteria {
        for s in STRATEGIES {
            for m in [ModuleOrderChoice::Pot, ModuleOrderChoice::Schreyer] {
                let mut cfg = EngineConfig::with_criterion(c);
                cfg.strategy = s;
                cfg.module_order = m;
                cfg.verify_vectors = true;
                out.push(cfg);
            }
        }
    }
    out
}

fn assert_agrees(ring: &Ring, inputs: &[Polynomial], cfg: &EngineConfig, expected: &[Polynomial]) {
    let run = gbgc(ring, inputs, cfg).unwrap();
    assert!(gb_equal(ring, &run.groebner_basis, expected), "{cfg:?}");
    assert!(run.stats.is_conserved(), "{:?}", run.stats);
    assert_eq!(run.stats.reduced_gb_size as usize, expected.len());
    assert_eq!(run.stats.vector_check_failures, 0);
    assert_eq!(run.stats.admissibility_violations, 0);
    assert!(run.violations.is_empty());
}

#[test]
fn every_configuration_matches_the_oracle() {
    // Without a criterion, cyclic4 under POT takes over 10^5 reductions.
    let cases = [
        (cyclic(gf(32003), 4).unwrap(), &CRITERIA[1..]),
        (katsura(gf(32003), 3).unwrap(), &CRITERIA[..]),
    ];
    for (system, criteria) in cases {
        let expected = reduce_gb(&system.ring, &buchberger(&system.ring, &system.polys));
        assert!(is_groebner(&system.ring, &expected));
        for cfg in configs(criteria) {
            assert_agrees(&system.ring, &system.polys, &cfg, &expected);
        }
    }
}

#[test]
fn criteria_only_remove_work() {
    let system = katsura(gf(32003), 4).unwrap();
    let reduced = |c| {
        gbgc(
            &system.ring,
            &system.polys,
            &EngineConfig::with_criterion(c),
        )
        .unwrap()
        .stats
        .reduced
    };
    let none = reduced(Criterion::None);
    assert!(none >= reduced(Criterion::F5));
    assert!(none >= reduced(Criterion::Ratio));
    assert!(none >= reduced(Criterion::Gvw));
}

#[test]
fn signature_only_mode_matches_full_vectors() {
    let system = katsura(gf(32003), 4).unwrap();
    for c in CRITERIA {
        let full = gbgc(
            &system.ring,
            &system.polys,
            &EngineConfig::with_criterion(c),
        )
        .unwrap();
        let mut cfg = EngineConfig::with_criterion(c);
        cfg.full_vector = false;
        let sig = gbgc(&system.ring, &system.polys, &cfg).unwrap();
        assert_eq!(full.groebner_basis, sig.groebner_basis);
        assert_eq!(full.stats.reduced_gb_size, 13);
    }
}

#[test]
fn full_vector_bases_have_standard_representations() {
    let system = katsura(gf(32003), 3).unwrap();
    let run = gbgc(&system.ring, &system.polys, &EngineConfig::default()).unwrap();
    let report = sgb_spotcheck(&run.context, &run.basis).unwrap();
    assert!(report.passed());
    assert!(report.pairs_checked > 0);
}

#[test]
fn stop_hook_interrupts() {
    let system = cyclic(gf(32003), 5).unwrap();
    let err = gbgc_until(
        &system.ring,
        &system.polys,
        &EngineConfig::default(),
        &|s| s.reduced >= 3,
    )
    .unwrap_err();
    assert!(matches!(err, Error::Interrupted(_)));
}

#[test]
fn cap_is_reported() {
    let system = katsura(gf(32003), 4).unwrap();
    let cfg = EngineConfig {
        cap: 5,
        ..EngineConfig::default()
    };
    assert!(matches!(
        gbgc(&system.ring, &system.polys, &cfg),
        Err(Error::CapExceeded(5))
    ));
}

fn random_poly(ring: Ring) -> impl Strategy<Value = Polynomial> {
    let mono = prop::collection::vec(0u32..=2, 3).prop_map(|e| Monomial::new(&e).unwrap());
    prop::collection::vec((1u64..11, mono), 1..4).prop_map(move |ts| {
        ring.from_terms(ts.into_iter().map(|(c, m)| (ring.field().element(c), m)))
            .unwrap()
    })
}

// Without a criterion some of these ideals need over 10^4 pair selections.
proptest! {
    #![proptest_config(Config { cases: 64, failure_persistence: None, ..Config::default() })]

    #[test]
    fn random_ideals_match_the_oracle(
        gens in prop::collection::vec(random_poly(Ring::new(gf(11), 3, TermOrder::grevlex())), 1..4),
        pick in 0usize..18,
    ) {
        let ring = Ring::new(gf(11), 3, TermOrder::grevlex());
        let expected = reduce_gb(&ring, &buchberger(&ring, &gens));
        let cfg = &configs(&CRITERIA[1..])[pick];
        let run = gbgc(&ring, &gens, cfg).unwrap();
        prop_assert!(gb_equal(&ring, &run.groebner_basis, &expected));
        prop_assert!(run.stats.is_conserved());
        prop_assert_eq!(run.stats.vector_check_failures, 0);
    }
}
