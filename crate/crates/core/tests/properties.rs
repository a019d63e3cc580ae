use std::cmp::Ordering;

use proptest::prelude::*;
use proptest::test_runner::Config;
use siggb_core::criteria::{po_less, OrderView, PartialOrderKind};
use siggb_core::{
    FieldElement, ModuleOrder, Monomial, Polynomial, PrimeField, Ring, Signature, TermOrder,
    TermOrderKind,
};

const CASES: u32 = 10_000;
const NVARS: usize = 3;

fn cfg() -> Config {
    Config {
        cases: CASES,
        failure_persistence: None,
        ..Config::default()
    }
}

fn mono(max: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max, NVARS).prop_map(|e| Monomial::new(&e).unwrap())
}

fn term_order() -> impl Strategy<Value = TermOrder> {
    let kind = prop_oneof![
        Just(TermOrderKind::Lex),
        Just(TermOrderKind::Grlex),
        Just(TermOrderKind::Grevlex)
    ];
    let perm = Just((0..NVARS).collect::<Vec<_>>()).prop_shuffle();
    (kind, perm).prop_map(|(k, p)| TermOrder::with_precedence(k, &p).unwrap())
}

fn gf7() -> PrimeField {
    PrimeField::new(7).unwrap()
}

fn poly(ring: &Ring) -> impl Strategy<Value = Polynomial> {
    let ring = ring.clone();
    prop::collection::vec((1u64..7, mono(3)), 0..6).prop_map(move |ts| {
        ring.from_terms(ts.into_iter().map(|(c, m)| (ring.field().element(c), m)))
            .unwrap()
    })
}

fn nonzero_poly(ring: &Ring) -> impl Strategy<Value = Polynomial> {
    poly(ring).prop_filter("nonzero", |p| !p.is_zero())
}

fn module_order(ring: Ring) -> impl Strategy<Value = (ModuleOrder, usize)> {
    let r = ring.clone();
    prop_oneof![
        (1usize..4).prop_map(move |m| (ModuleOrder::pot(r.order().clone(), m), m)),
        prop::collection::vec(nonzero_poly(&ring), 1..4)
            .prop_map(move |gens| (ModuleOrder::schreyer(&ring, &gens).unwrap(), gens.len())),
    ]
}

fn grevlex_ring() -> Ring {
    Ring::new(gf7(), NVARS, TermOrder::grevlex())
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn term_order_axioms(o in term_order(), a in mono(5), b in mono(5), c in mono(5), t in mono(4)) {
        let ab = o.cmp(&a, &b);
        prop_assert_eq!(ab, o.cmp(&b, &a).reverse());
        prop_assert_eq!(ab == Ordering::Equal, a == b);
        if ab != Ordering::Greater && o.cmp(&b, &c) != Ordering::Greater {
            prop_assert_ne!(o.cmp(&a, &c), Ordering::Greater);
        }
        prop_assert_eq!(o.cmp(&a.mul(&t), &b.mul(&t)), ab);
        prop_assert_ne!(o.cmp(&Monomial::one(NVARS), &a), Ordering::Greater);
    }

    #[test]
    fn lcm_is_least_common_multiple(a in mono(5), b in mono(5)) {
        let l = a.lcm(&b);
        prop_assert!(a.divides(&l) && b.divides(&l));
        for v in 0..NVARS {
            if l.exponent(v) > 0 {
                let mut e: Vec<u32> = l.exponents().iter().map(|&x| x as u32).collect();
                e[v] -= 1;
                let smaller = Monomial::new(&e).unwrap();
                prop_assert!(!(a.divides(&smaller) && b.divides(&smaller)));
            }
        }
    }

    #[test]
    fn field_axioms(a in 0u64..32003, b in 0u64..32003, c in 0u64..32003) {
        let f = PrimeField::new(32003).unwrap();
        let (a, b, c) = (f.element(a), f.element(b), f.element(c));
        prop_assert_eq!(f.add(a, b), f.add(b, a));
        prop_assert_eq!(f.mul(a, b), f.mul(b, a));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
    }

    #[test]
    fn module_order_is_multiplicative(
        (mo, m) in module_order(grevlex_ring()),
        i in 0usize..4, j in 0usize..4,
        a in mono(4), b in mono(4), t in mono(3),
    ) {
        let s = Signature::new(i % m, a);
        let u = Signature::new(j % m, b);
        let su = mo.cmp(&s, &u);
        prop_assert_eq!(su, mo.cmp(&u, &s).reverse());
        prop_assert_eq!(su == Ordering::Equal, s == u);
        prop_assert_eq!(mo.cmp(&s.mul(&t), &u.mul(&t)), su);
        prop_assert_eq!(mo.cmp_scaled(&t, &s, &t, &u), su);
        prop_assert!(s.divides(&s.mul(&t)));
    }

    #[test]
    fn ratio_cross_products_match_lcm_form(
        o in term_order(),
        sa in mono(4), sb in mono(4), la in mono(4), lb in mono(4),
    ) {
        let cross = o.cmp_products(&la, &sb, &lb, &sa);
        let l = sa.lcm(&sb);
        let (ta, tb) = (l.div(&sa), l.div(&sb));
        prop_assert_eq!(o.cmp(&ta.mul(&la), &tb.mul(&lb)), cross);
    }

    #[test]
    fn normal_form_is_idempotent(
        p in poly(&grevlex_ring()),
        basis in prop::collection::vec(poly(&grevlex_ring()), 0..4),
    ) {
        let r = grevlex_ring();
        let nf = r.normal_form(&p, &basis);
        prop_assert!(r.is_canonical(&nf));
        prop_assert_eq!(r.normal_form(&nf, &basis), nf.clone());
        for t in nf.terms() {
            for b in basis.iter().filter(|b| !b.is_zero()) {
                prop_assert!(!b.lpp().unwrap().divides(&t.mono));
            }
        }
    }
}

#[derive(Clone, Debug)]
struct Entry {
    sig: Signature,
    lead: Option<Monomial>,
}

fn snapshot() -> impl Strategy<Value = Vec<Entry>> {
    let entry =
        (0usize..2, mono(3), prop::option::weighted(0.8, mono(3))).prop_map(|(index, m, lead)| {
            Entry {
                sig: Signature::new(index, m),
                lead,
            }
        });
    prop::collection::vec(entry, 1..=12)
}

fn views(s: &[Entry]) -> Vec<OrderView<'_>> {
    s.iter()
        .enumerate()
        .map(|(serial, e)| OrderView {
            serial,
            sig: &e.sig,
            lead: e.lead.as_ref(),
        })
        .collect()
}

proptest! {
    #![proptest_config(cfg())]

    #[test]
    fn partial_orders_are_strict(snap in snapshot(), o in term_order()) {
        let v = views(&snap);
        for kind in [PartialOrderKind::F5, PartialOrderKind::Ratio] {
            let less = |a: usize, b: usize| po_less(&v[a], &v[b], kind, &o);
            for a in 0..v.len() {
                prop_assert!(!less(a, a));
                for b in 0..v.len() {
                    if less(a, b) {
                        prop_assert!(!less(b, a));
                        for c in 0..v.len() {
                            if less(b, c) {
                                prop_assert!(less(a, c), "{:?} {} {} {}", kind, a, b, c);
                            }
                        }
                    }
                }
            }
        }
    }
}

proptest! {
    #![proptest_config(Config { cases: 2_000, ..cfg() })]

    #[test]
    fn arithmetic_stays_canonical(
        ops in prop::collection::vec((0u8..4, 0u64..7, mono(2), poly(&grevlex_ring())), 1..8),
    ) {
        let r = grevlex_ring();
        let f = r.field();
        let mut acc = Polynomial::zero();
        for (op, c, m, q) in ops {
            let c = f.element(c);
            acc = match op {
                0 => r.add(&acc, &q),
                1 => r.sub(&acc, &q),
                2 => r.axpy(&acc, c, Some(&m), &q),
                _ => r.mul_term(c, &m, &r.add(&acc, &q)),
            };
            prop_assert!(r.is_canonical(&acc));
        }
    }

    #[test]
    fn spoly_cancels_leads(f in nonzero_poly(&grevlex_ring()), g in nonzero_poly(&grevlex_ring())) {
        let r = grevlex_ring();
        let s = r.spoly(&f, &g).unwrap();
        let l = f.lpp().unwrap().lcm(g.lpp().unwrap());
        if let Some(ls) = s.lpp() {
            prop_assert_eq!(r.order().cmp(ls, &l), Ordering::Less);
        }
    }
}

#[test]
fn field_axioms_exhaustive_gf7() {
    let f = gf7();
    let all: Vec<FieldElement> = (0..7).map(|v| f.element(v)).collect();
    for &a in &all {
        if !a.is_zero() {
            assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElement::ONE);
        }
        for &b in &all {
            assert_eq!(f.add(a, b), f.add(b, a));
            assert_eq!(f.mul(a, b), f.mul(b, a));
            for &c in &all {
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            }
        }
    }
    assert!(f.inv(all[0]).is_err());
}
