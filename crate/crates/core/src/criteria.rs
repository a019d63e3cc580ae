//! The generalized rewritable criterion and its partial orders.
//!
//! A scaled element `t * (u, f)` is gen-rewritable when some element of `G`
//! has a signature dividing `lpp(t u)` and is smaller than `(u, f)` under a
//! partial order. The engine is correct for any order that is admissible:
//! each element produced by reducing a pair must be smaller than the pair's
//! first element. [`AdmissibilityMonitor`] checks that on every reduction.

use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::engine::{sig_reduce, Basis, Context, Member};
use crate::ground::{Monomial, TermOrder};
use crate::pairs::CriticalPair;
use crate::sig::{LabeledPoly, SigPoly, Signature};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartialOrderKind {
    /// Syzygies below nonzero elements, otherwise later insertion is smaller.
    F5,
    /// Same-index elements compared by `lpp(f) / lpp(u)`, later insertion
    /// smaller on ties. Elements at different indices are incomparable.
    Ratio,
    /// Earlier insertion is smaller. Not admissible.
    #[cfg(any(test, feature = "unsound-orders"))]
    EarlierUnsound,
}

impl PartialOrderKind {
    pub fn name(self) -> &'static str {
        match self {
            PartialOrderKind::F5 => "f5",
            PartialOrderKind::Ratio => "ratio",
            #[cfg(any(test, feature = "unsound-orders"))]
            PartialOrderKind::EarlierUnsound => "earlier-unsound",
        }
    }
}

/// What the orders look at: serial, signature, and `lpp(f)` (`None` for `f = 0`).
#[derive(Clone, Copy, Debug)]
pub struct OrderView<'a> {
    pub serial: usize,
    pub sig: &'a Signature,
    pub lead: Option<&'a Monomial>,
}

impl<'a> OrderView<'a> {
    pub fn of(e: &'a LabeledPoly) -> Self {
        Self {
            serial: e.serial,
            sig: &e.sig,
            lead: e.poly.lpp(),
        }
    }

    pub fn of_member(m: Member<'a>) -> Self {
        match m {
            Member::Nonzero(e) => Self::of(e),
            Member::Syzygy(s) => Self {
                serial: s.serial,
                sig: &s.sig,
                lead: None,
            },
        }
    }
}

/// `a < b` under `kind`.
pub fn po_less(
    a: &OrderView<'_>,
    b: &OrderView<'_>,
    kind: PartialOrderKind,
    term: &TermOrder,
) -> bool {
    match kind {
        PartialOrderKind::F5 => match (a.lead, b.lead) {
            (None, Some(_)) => true,
            (Some(_), None) => false,
            _ => a.serial > b.serial,
        },
        PartialOrderKind::Ratio => {
            if a.sig.index != b.sig.index {
                return false;
            }
            match (a.lead, b.lead) {
                (None, Some(_)) => true,
                (Some(_), None) => false,
                (None, None) => a.serial > b.serial,
                (Some(la), Some(lb)) => match term.cmp_products(la, &b.sig.mono, lb, &a.sig.mono) {
                    Ordering::Less => true,
                    Ordering::Greater => false,
                    Ordering::Equal => a.serial > b.serial,
                },
            }
        }
        #[cfg(any(test, feature = "unsound-orders"))]
        PartialOrderKind::EarlierUnsound => match (a.lead, b.lead) {
            (None, Some(_)) => true,
            (Some(_), None) => false,
            _ => a.serial < b.serial,
        },
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WitnessReason {
    SyzygyDivisor,
    OrderSmaller,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteWitness {
    pub serial: usize,
    pub sig: Signature,
    pub reason: WitnessReason,
}

/// Looks for a witness that `t * a` is gen-rewritable by `basis`: syzygies
/// first, then nonzero elements in insertion order.
pub fn gen_rewritable(
    t: &Monomial,
    a: &LabeledPoly,
    basis: &Basis,
    kind: PartialOrderKind,
    term: &TermOrder,
) -> Result<Option<RewriteWitness>> {
    if a.poly.is_zero() {
        return Err(Error::Precondition(
            "gen-rewritable query on a zero element",
        ));
    }
    let target = a.sig.try_mul(t)?;
    let av = OrderView::of(a);
    for s in basis.syzygy_divisors(&target) {
        if po_less(&OrderView::of_member(Member::Syzygy(s)), &av, kind, term) {
            return Ok(Some(RewriteWitness {
                serial: s.serial,
                sig: s.sig.clone(),
                reason: WitnessReason::SyzygyDivisor,
            }));
        }
    }
    for e in basis.nonzero_sig_divisors(&target) {
        if e.serial != a.serial && po_less(&OrderView::of(e), &av, kind, term) {
            return Ok(Some(RewriteWitness {
                serial: e.serial,
                sig: e.sig.clone(),
                reason: WitnessReason::OrderSmaller,
            }));
        }
    }
    Ok(None)
}

/// Either half of the pair is gen-rewritable.
pub fn pair_rewritable(
    p: &CriticalPair,
    basis: &Basis,
    kind: PartialOrderKind,
    term: &TermOrder,
) -> Result<bool> {
    for side in [&p.first, &p.second] {
        let e = basis
            .get(side.serial)
            .ok_or(Error::UnknownSerial(side.serial))?;
        if gen_rewritable(&side.mult, e, basis, kind, term)?.is_some() {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Some recorded syzygy signature divides `lpp(t u)`.
pub fn gvw_divisible(t: &Monomial, a: &LabeledPoly, basis: &Basis) -> Result<bool> {
    if a.poly.is_zero() {
        return Err(Error::Precondition(
            "GVW-divisibility query on a zero element",
        ));
    }
    let target = a.sig.try_mul(t)?;
    let found = basis.syzygy_divisors(&target).next().is_some();
    Ok(found)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SuperTopOutcome {
    /// The reduced element is super top-reducible by the element with this serial.
    Reducible {
        witness: usize,
    },
    NotReducible,
    /// The reduction reached zero; the reduced element is a syzygy.
    Syzygy(SigPoly),
}

/// Reduces `t * a` signature-preservingly to `(w, h)` and asks whether some
/// nonzero `(u', f')` in `G` is a super top-reducer of it: `sig(u') | lpp(w)`,
/// `lpp(f') | lpp(h)` with the same cofactor, and matching coefficient ratios
/// `lc(w) / lc(u') = lc(h) / lc(f')`. If no reduction step applies, the
/// answer is no.
pub fn eventually_super_top_reducible(
    ctx: &Context,
    t: &Monomial,
    a: &LabeledPoly,
    basis: &Basis,
) -> Result<SuperTopOutcome> {
    if a.poly.is_zero() {
        return Err(Error::Precondition(
            "super top-reducibility query on a zero element",
        ));
    }
    let mut elem = a
        .to_sigpoly()
        .scaled(&ctx.ring, crate::FieldElement::ONE, t);
    if !sig_reduce(ctx, &mut elem, basis)? {
        return Ok(SuperTopOutcome::NotReducible);
    }
    let Some(lh) = elem.poly.lpp() else {
        return Ok(SuperTopOutcome::Syzygy(elem));
    };
    let field = ctx.ring.field();
    let term = ctx.ring.order();
    for e in basis.nonzero_sig_divisors(&elem.sig) {
        let le = e.poly.lpp().expect("nonzero member");
        if !le.divides(lh) {
            continue;
        }
        // lpp(w) / sig(e) == lpp(h) / lpp(e)  <=>  lpp(w) * lpp(e) == lpp(h) * sig(e)
        if term.cmp_products(&elem.sig.mono, le, lh, &e.sig.mono) != Ordering::Equal {
            continue;
        }
        if field.mul(elem.sig_lc, e.poly.lc()) != field.mul(elem.poly.lc(), e.sig_lc) {
            continue;
        }
        return Ok(SuperTopOutcome::Reducible { witness: e.serial });
    }
    Ok(SuperTopOutcome::NotReducible)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub parent: usize,
    pub child: usize,
    pub kind: PartialOrderKind,
}

/// Records every reduction whose result is not below its parent.
#[derive(Clone, Debug, Default)]
pub struct AdmissibilityMonitor {
    pub enabled: bool,
    violations: Vec<Violation>,
    checks: u64,
}

impl AdmissibilityMonitor {
    pub fn new(enabled: bool) -> Self {
        Self {
            enabled,
            ..Self::default()
        }
    }

    /// `po_less(child, parent)`; a `false` is logged. Always `true` when disabled.
    pub fn check(
        &mut self,
        parent: &OrderView<'_>,
        child: &OrderView<'_>,
        kind: PartialOrderKind,
        term: &TermOrder,
    ) -> bool {
        if !self.enabled {
            return true;
        }
        self.checks += 1;
        let ok = po_less(child, parent, kind, term);
        if !ok {
            self.violations.push(Violation {
                parent: parent.serial,
                child: child.serial,
                kind,
            });
        }
        ok
    }

    pub fn violations(&self) -> &[Violation] {
        &self.violations
    }

    pub fn checks(&self) -> u64 {
        self.checks
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ground::{FieldElement, PrimeField};
    use crate::poly::{Polynomial, Ring};
    use crate::sig::{ModuleOrder, SyzygyOrigin, SyzygyRecord};

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn view<'a>(serial: usize, sig: &'a Signature, lead: Option<&'a Monomial>) -> OrderView<'a> {
        OrderView { serial, sig, lead }
    }

    #[test]
    fn f5_order() {
        let term = TermOrder::grevlex();
        let s = Signature::new(0, m(&[0, 0]));
        let x = m(&[1, 0]);
        let syz = view(1, &s, None);
        let nz = view(3, &s, Some(&x));
        assert!(po_less(&syz, &nz, PartialOrderKind::F5, &term));
        assert!(!po_less(&nz, &syz, PartialOrderKind::F5, &term));
        let later = view(4, &s, Some(&x));
        assert!(po_less(&later, &nz, PartialOrderKind::F5, &term));
        assert!(!po_less(&nz, &nz, PartialOrderKind::F5, &term));
        let syz2 = view(2, &s, None);
        assert!(po_less(&syz2, &syz, PartialOrderKind::F5, &term));
    }

    #[test]
    fn ratio_order() {
        let term = TermOrder::grevlex();
        let (xe1, e1, e2) = (
            Signature::new(0, m(&[1, 0])),
            Signature::new(0, m(&[0, 0])),
            Signature::new(1, m(&[0, 0])),
        );
        let (x, x2) = (m(&[1, 0]), m(&[2, 0]));
        let a = view(5, &xe1, Some(&x2));
        let b = view(2, &e1, Some(&x));
        assert!(po_less(&a, &b, PartialOrderKind::Ratio, &term));
        assert!(!po_less(&b, &a, PartialOrderKind::Ratio, &term));
        let syz = view(0, &e1, None);
        assert!(po_less(&syz, &b, PartialOrderKind::Ratio, &term));
        assert!(po_less(&syz, &a, PartialOrderKind::Ratio, &term));
        let other = view(7, &e2, Some(&x));
        assert!(!po_less(&other, &b, PartialOrderKind::Ratio, &term));
        assert!(!po_less(&b, &other, PartialOrderKind::Ratio, &term));
        // x^2/x beats 1/1: a strictly smaller ratio wins regardless of serial
        let small = view(1, &xe1, Some(&x));
        assert!(po_less(&small, &b, PartialOrderKind::Ratio, &term));
    }

    #[test]
    fn earlier_order() {
        let term = TermOrder::grevlex();
        let s = Signature::new(0, m(&[0, 0]));
        let x = m(&[1, 0]);
        let early = view(1, &s, Some(&x));
        let late = view(2, &s, Some(&x));
        assert!(po_less(
            &early,
            &late,
            PartialOrderKind::EarlierUnsound,
            &term
        ));
        let mut mon = AdmissibilityMonitor::new(true);
        assert!(!mon.check(&early, &late, PartialOrderKind::EarlierUnsound, &term));
        assert!(mon.check(&early, &late, PartialOrderKind::F5, &term));
        assert_eq!(
            mon.violations(),
            &[Violation {
                parent: 1,
                child: 2,
                kind: PartialOrderKind::EarlierUnsound
            }]
        );
        assert_eq!(mon.checks(), 2);
        let mut off = AdmissibilityMonitor::new(false);
        assert!(off.check(&early, &late, PartialOrderKind::EarlierUnsound, &term));
        assert_eq!(off.checks(), 0);
    }

    fn ring() -> Ring {
        Ring::new(PrimeField::new(7).unwrap(), 2, TermOrder::grevlex())
    }

    fn gen(b: &mut Basis, index: usize, sig: Monomial, f: Polynomial) -> usize {
        b.push_nonzero(SigPoly {
            sig: Signature::new(index, sig),
            sig_lc: FieldElement::ONE,
            poly: f,
            vector: None,
        })
    }

    #[test]
    fn rewritable_witnesses() {
        let r = ring();
        let term = r.order().clone();
        let mut b = Basis::new(2);
        let a = gen(&mut b, 0, m(&[0, 0]), r.var(0));
        let ae = b.get(a).unwrap().clone();
        for kind in [PartialOrderKind::F5, PartialOrderKind::Ratio] {
            assert_eq!(
                gen_rewritable(&m(&[3, 2]), &ae, &b, kind, &term).unwrap(),
                None
            );
        }

        let mut syz = SyzygyRecord::new(
            Signature::new(0, m(&[0, 1])),
            SyzygyOrigin::ZeroReduction,
            None,
        );
        syz.serial = 0;
        let s = b.push_syzygy(syz);
        for kind in [PartialOrderKind::F5, PartialOrderKind::Ratio] {
            let w = gen_rewritable(&m(&[1, 1]), &ae, &b, kind, &term)
                .unwrap()
                .unwrap();
            assert_eq!((w.serial, w.reason), (s, WitnessReason::SyzygyDivisor));
            assert_eq!(
                gen_rewritable(&m(&[2, 0]), &ae, &b, kind, &term).unwrap(),
                None
            );
        }
        assert!(gvw_divisible(&m(&[2, 1]), &ae, &b).unwrap());
        assert!(!gvw_divisible(&m(&[0, 0]), &ae, &b).unwrap());

        // a later element with signature x*e1 rewrites x*a under F5
        let later = gen(&mut b, 0, m(&[1, 0]), r.var(1));
        let w = gen_rewritable(&m(&[1, 0]), &ae, &b, PartialOrderKind::F5, &term)
            .unwrap()
            .unwrap();
        assert_eq!((w.serial, w.reason), (later, WitnessReason::OrderSmaller));
        // ratio: y/x < x/1, so it rewrites as well
        assert!(
            gen_rewritable(&m(&[1, 0]), &ae, &b, PartialOrderKind::Ratio, &term)
                .unwrap()
                .is_some()
        );
        assert!(gen_rewritable(
            &m(&[1, 0]),
            &ae,
            &b,
            PartialOrderKind::EarlierUnsound,
            &term
        )
        .unwrap()
        .is_none());

        let zero = LabeledPoly {
            poly: Polynomial::zero(),
            ..ae.clone()
        };
        assert!(gen_rewritable(&m(&[0, 0]), &zero, &b, PartialOrderKind::F5, &term).is_err());
        assert!(gvw_divisible(&m(&[0, 0]), &zero, &b).is_err());
    }

    #[test]
    fn super_top_reduction() {
        let r = ring();
        let one = FieldElement::ONE;
        let mo = ModuleOrder::pot(r.order().clone(), 2);
        let ctx = Context::new(
            r.clone(),
            mo,
            alloc::vec![r.var(0), r.monomial_poly(one, m(&[0, 3]))],
        );
        let mut b = Basis::new(2);
        let g1 = gen(&mut b, 0, m(&[0, 0]), r.var(0));
        gen(&mut b, 1, m(&[0, 0]), r.monomial_poly(one, m(&[0, 3])));
        let g1e = b.get(g1).unwrap().clone();
        // x * (e1, x) admits no signature-preserving step
        assert_eq!(
            eventually_super_top_reducible(&ctx, &m(&[1, 0]), &g1e, &b).unwrap(),
            SuperTopOutcome::NotReducible
        );

        // (x e1, y^3 + x^2) reduces by (e2, y^3) to (x e1, x^2), which (e1, x) super top-reduces
        let f = r.add(
            &r.monomial_poly(one, m(&[0, 3])),
            &r.monomial_poly(one, m(&[2, 0])),
        );
        let a = gen(&mut b, 0, m(&[1, 0]), f);
        let ae = b.get(a).unwrap().clone();
        assert_eq!(
            eventually_super_top_reducible(&ctx, &m(&[0, 0]), &ae, &b).unwrap(),
            SuperTopOutcome::Reducible { witness: g1 }
        );
        // y * a reduces to (xy e1, x^2 y), cofactor xy against (e1, x) on both sides
        assert_eq!(
            eventually_super_top_reducible(&ctx, &m(&[0, 1]), &ae, &b).unwrap(),
            SuperTopOutcome::Reducible { witness: g1 }
        );

        // (x e1, y^3) reduces to zero
        let z = gen(&mut b, 0, m(&[1, 0]), r.monomial_poly(one, m(&[0, 3])));
        let ze = b.get(z).unwrap().clone();
        match eventually_super_top_reducible(&ctx, &m(&[0, 0]), &ze, &b).unwrap() {
            SuperTopOutcome::Syzygy(e) => {
                assert!(e.poly.is_zero());
                assert_eq!(e.sig, Signature::new(0, m(&[1, 0])));
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
