//! Independent checks: a plain Buchberger algorithm, reduced-basis
//! comparison, and a standard-representation test for signature bases.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::engine::{Basis, Context, Member};
use crate::ground::{FieldElement, Monomial, PrimeField};
use crate::pairs::make_pair;
use crate::poly::{Polynomial, Ring};
use crate::sig::{SigPoly, Signature};
use crate::{Error, Result};

/// A Gröbner basis of `inputs`: Buchberger's algorithm with the product
/// criterion, always treating a pair of lowest lcm degree next.
pub fn buchberger(ring: &Ring, inputs: &[Polynomial]) -> Vec<Polynomial> {
    let mut g: Vec<Polynomial> = inputs
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| ring.make_monic(p))
        .collect();
    // (lcm degree, insertion sequence) -> (i, j)
    let mut pairs: BTreeMap<(u32, u64), (usize, usize)> = BTreeMap::new();
    let mut seq = 0u64;
    let mut add_pairs =
        |g: &[Polynomial], j: usize, pairs: &mut BTreeMap<(u32, u64), (usize, usize)>| {
            let lj = g[j].lpp().expect("nonzero");
            for (i, gi) in g.iter().enumerate().take(j) {
                let li = gi.lpp().expect("nonzero");
                if li.is_coprime(lj) {
                    continue;
                }
                pairs.insert((li.lcm(lj).degree(), seq), (i, j));
                seq += 1;
            }
        };
    for j in 0..g.len() {
        add_pairs(&g, j, &mut pairs);
    }
    while let Some((_, (i, j))) = pairs.pop_first() {
        let s = ring.spoly(&g[i], &g[j]).expect("nonzero members");
        let h = ring.normal_form(&s, &g);
        if !h.is_zero() {
            g.push(ring.make_monic(&h));
            add_pairs(&g, g.len() - 1, &mut pairs);
        }
    }
    g
}

/// The unique reduced Gröbner basis spanned by a Gröbner basis `b`,
/// ascending by leading monomial.
pub fn reduce_gb(ring: &Ring, b: &[Polynomial]) -> Vec<Polynomial> {
    ring.interreduce(b)
}

/// Every S-polynomial of `g` reduces to zero.
pub fn is_groebner(ring: &Ring, g: &[Polynomial]) -> bool {
    let g: Vec<Polynomial> = g.iter().filter(|p| !p.is_zero()).cloned().collect();
    for j in 0..g.len() {
        for i in 0..j {
            let s = ring.spoly(&g[i], &g[j]).expect("nonzero members");
            if !ring.normal_form(&s, &g).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Whether `a` and `b` generate the same ideal.
pub fn gb_equal(ring: &Ring, a: &[Polynomial], b: &[Polynomial]) -> bool {
    reduce_gb(ring, &buchberger(ring, a)) == reduce_gb(ring, &buchberger(ring, b))
}

/// Upper bound on the number of unknown coefficients in one
/// standard-representation search.
pub const REPRESENTATION_BUDGET: usize = 200_000;

/// Coordinates of `R^m x R`: the polynomial part sorts above every module
/// component so pivots on it are eliminated first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Coord {
    Module(usize, Monomial),
    Poly(Monomial),
}

type SparseVec = Vec<(Coord, FieldElement)>;

fn embed(ring: &Ring, t: &Monomial, vector: Option<&[Polynomial]>, poly: &Polynomial) -> SparseVec {
    let mut out = SparseVec::new();
    for term in poly.terms() {
        out.push((Coord::Poly(term.mono.mul(t)), term.coeff));
    }
    for (j, uj) in vector.into_iter().flatten().enumerate() {
        for term in ring.mul_term(FieldElement::ONE, t, uj).terms() {
            out.push((Coord::Module(j, term.mono.clone()), term.coeff));
        }
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// `a - c * b` for vectors sorted descending.
fn sub_scaled(field: &PrimeField, a: &SparseVec, c: FieldElement, b: &SparseVec) -> SparseVec {
    let mut out = SparseVec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let ord = match (a.get(i), b.get(j)) {
            (Some(x), Some(y)) => x.0.cmp(&y.0),
            (Some(_), None) => Ordering::Greater,
            _ => Ordering::Less,
        };
        match ord {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                out.push((b[j].0.clone(), field.neg(field.mul(c, b[j].1))));
                j += 1;
            }
            Ordering::Equal => {
                let v = field.sub(a[i].1, field.mul(c, b[j].1));
                if !v.is_zero() {
                    out.push((a[i].0.clone(), v));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

/// Row echelon form keyed by leading coordinate; rows have leading coefficient 1.
struct Echelon<'f> {
    field: &'f PrimeField,
    rows: BTreeMap<Coord, SparseVec>,
}

impl Echelon<'_> {
    fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, c)) = v.first() {
            match self.rows.get(lead) {
                Some(row) => {
                    let c = *c;
                    v = sub_scaled(self.field, &v, c, row);
                }
                None => break,
            }
        }
        v
    }

    fn insert(&mut self, v: SparseVec) {
        let v = self.reduce(v);
        if let Some((lead, c)) = v.first() {
            let inv = self.field.inv(*c).expect("nonzero");
            let lead = lead.clone();
            let row = v
                .into_iter()
                .map(|(k, x)| (k, self.field.mul(inv, x)))
                .collect();
            self.rows.insert(lead, row);
        }
    }

    /// Any nonzero element of the span leads with a pivot, so `v` is in the
    /// span iff leading-coordinate reduction clears it.
    fn in_span(&self, v: SparseVec) -> bool {
        self.reduce(v).is_empty()
    }
}

fn monomials_up_to(nvars: usize, max_deg: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = alloc::vec![0u32; nvars];
    fn rec(out: &mut Vec<Monomial>, exps: &mut [u32], var: usize, left: u32) {
        if var == exps.len() {
            out.push(Monomial::new(exps).expect("small exponents"));
            return;
        }
        for e in 0..=left {
            exps[var] = e;
            rec(out, exps, var + 1, left - e);
        }
        exps[var] = 0;
    }
    rec(&mut out, &mut exps, 0, max_deg);
    out
}

/// Whether `elem = (u, f)` is `sum p_i (v_i, g_i)` over members of `basis`
/// with `lpp(p_i v_i) <= lpp(u)` and `lpp(p_i g_i) <= lpp(f)`.
///
/// Multipliers are searched up to degree `deg lpp(f) - min deg lpp(g_i) + 2`
/// (with `deg lpp(u)` standing in when larger), as a linear system over the
/// field. A `true` answer is always exact; `false` means no representation
/// with multipliers in that range. Requires module vectors throughout.
pub fn has_standard_representation(ctx: &Context, elem: &SigPoly, basis: &Basis) -> Result<bool> {
    let ring = &ctx.ring;
    let mo = &ctx.module_order;
    let u = elem.vector.as_ref().ok_or(Error::Precondition(
        "standard representation needs module vectors",
    ))?;
    let Some((sigma, _)) = mo.vector_lead(u) else {
        return Ok(elem.poly.is_zero());
    };
    let f_lead = elem.poly.lpp();
    let min_deg = basis
        .nonzero()
        .iter()
        .filter_map(|e| e.poly.lpp())
        .map(Monomial::degree)
        .min()
        .unwrap_or(0);
    let bound = f_lead
        .map_or(0, |l| l.degree().saturating_sub(min_deg))
        .max(sigma.mono.degree())
        + 2;
    let candidates = monomials_up_to(ring.nvars(), bound);

    let mut columns = 0usize;
    let mut ech = Echelon {
        field: ring.field(),
        rows: BTreeMap::new(),
    };
    for member in basis.members() {
        let (sig, vector, poly) = match member {
            Member::Nonzero(e) => (&e.sig, e.vector.as_deref(), &e.poly),
            Member::Syzygy(s) => (&s.sig, s.vector.as_deref(), &Polynomial::zero()),
        };
        let vector = vector.ok_or(Error::Precondition(
            "standard representation needs module vectors",
        ))?;
        let g_lead = poly.lpp();
        for t in &candidates {
            if mo.cmp_scaled(t, sig, &ring.one(), &sigma) == Ordering::Greater {
                continue;
            }
            if let Some(lg) = g_lead {
                match f_lead {
                    Some(lf)
                        if ring.order().cmp_products(t, lg, lf, &ring.one())
                            != Ordering::Greater => {}
                    _ => continue,
                }
            }
            columns += 1;
            if columns > REPRESENTATION_BUDGET {
                return Err(Error::ScaleGuard("standard representation search"));
            }
            ech.insert(embed(ring, t, Some(vector), poly));
        }
    }
    Ok(ech.in_span(embed(ring, &ring.one(), Some(u), &elem.poly)))
}

/// Some nonzero `(v, g)` has `lpp(g) | lpp(f)` and `t lpp(v) <= lpp(u)`
/// for `t = lpp(f) / lpp(g)`.
pub fn has_divisor_pair(ctx: &Context, sig: &Signature, poly: &Polynomial, basis: &Basis) -> bool {
    let Some(lf) = poly.lpp() else {
        return true;
    };
    let one = ctx.ring.one();
    basis.nonzero().iter().any(|e| {
        let lg = e.poly.lpp().expect("nonzero member");
        lg.divides(lf)
            && ctx.module_order.cmp_scaled(&lf.div(lg), &e.sig, &one, sig) != Ordering::Greater
    })
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SpotcheckReport {
    pub pairs_checked: usize,
    /// Serials of pairs whose S-polynomial has no standard representation.
    pub failures: Vec<(usize, usize)>,
    /// Positive answers without a divisor pair; always empty for a sound checker.
    pub missing_divisor: Vec<(usize, usize)>,
}

impl SpotcheckReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.missing_divisor.is_empty()
    }
}

/// Checks every critical pair of the nonzero members of `basis` for a
/// standard representation of its S-polynomial with respect to `basis`.
pub fn sgb_spotcheck(ctx: &Context, basis: &Basis) -> Result<SpotcheckReport> {
    let ring = &ctx.ring;
    let field = ring.field();
    let mut report = SpotcheckReport::default();
    let nz = basis.nonzero();
    for j in 0..nz.len() {
        for i in 0..j {
            let p = make_pair(&ctx.module_order, &nz[i], &nz[j])?;
            let f = basis
                .get(p.first.serial)
                .ok_or(Error::UnknownSerial(p.first.serial))?;
            let g = basis
                .get(p.second.serial)
                .ok_or(Error::UnknownSerial(p.second.serial))?;
            let (Some(u), Some(v)) = (&f.vector, &g.vector) else {
                return Err(Error::Precondition("spot check needs module vectors"));
            };
            let c = field.div(f.poly.lc(), g.poly.lc())?;
            let comb = |a: &Polynomial, b: &Polynomial| {
                ring.sub_scaled(
                    &ring.mul_term(FieldElement::ONE, &p.first.mult, a),
                    c,
                    &p.second.mult,
                    b,
                )
            };
            let vector: Vec<Polynomial> = u.iter().zip(v).map(|(a, b)| comb(a, b)).collect();
            let poly = comb(&f.poly, &g.poly);
            let (sig, sig_lc) = match ctx.module_order.vector_lead(&vector) {
                Some(l) => l,
                None => (p.lead_sig.clone(), FieldElement::ZERO),
            };
            let elem = SigPoly {
                sig,
                sig_lc,
                poly,
                vector: Some(vector),
            };
            report.pairs_checked += 1;
            let key = (nz[i].serial, nz[j].serial);
            if !has_standard_representation(ctx, &elem, basis)? {
                report.failures.push(key);
            } else if !has_divisor_pair(ctx, &elem.sig, &elem.poly, basis) {
                report.missing_divisor.push(key);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{gbgc, Criterion, EngineConfig, ModuleOrderChoice};
    use crate::ground::TermOrder;
    use crate::sig::ModuleOrder;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e).unwrap()
    }

    fn ring() -> Ring {
        Ring::new(PrimeField::new(7).unwrap(), 2, TermOrder::grevlex())
    }

    fn poly(r: &Ring, terms: &[(i64, &[u32])]) -> Polynomial {
        r.from_terms(terms.iter().map(|(c, e)| (r.field().from_i64(*c), m(e))))
            .unwrap()
    }

    fn example(r: &Ring) -> Vec<Polynomial> {
        alloc::vec![
            poly(r, &[(1, &[2, 0]), (-1, &[0, 0])]),
            poly(r, &[(1, &[1, 1]), (-1, &[0, 0])])
        ]
    }

    fn expected(r: &Ring) -> Vec<Polynomial> {
        alloc::vec![
            poly(r, &[(1, &[1, 0]), (-1, &[0, 1])]),
            poly(r, &[(1, &[0, 2]), (-1, &[0, 0])])
        ]
    }

    #[test]
    fn buchberger_examples() {
        let r = ring();
        let g = buchberger(&r, &example(&r));
        assert!(is_groebner(&r, &g));
        assert_eq!(reduce_gb(&r, &g), expected(&r));
        let x = r.var(0);
        assert_eq!(
            reduce_gb(&r, &buchberger(&r, std::slice::from_ref(&x))),
            vec![x.clone()]
        );
        let x2 = r.mul(&x, &x);
        assert_eq!(
            reduce_gb(&r, &buchberger(&r, &[x.clone(), x2])),
            vec![x.clone()]
        );
        assert!(buchberger(&r, &[]).is_empty());
    }

    #[test]
    fn reduce_examples() {
        let r = ring();
        let xy = poly(&r, &[(1, &[1, 0]), (-1, &[0, 1])]);
        let b = [
            xy,
            example(&r)[0].clone(),
            poly(&r, &[(1, &[0, 2]), (-1, &[0, 0])]),
        ];
        assert_eq!(reduce_gb(&r, &b), expected(&r));
        assert_eq!(reduce_gb(&r, &expected(&r)), expected(&r));
        let two_x = r.scale(r.field().element(2), &r.var(0));
        assert_eq!(reduce_gb(&r, &[two_x]), [r.var(0)]);
    }

    #[test]
    fn equality() {
        let r = ring();
        let run = gbgc(&r, &example(&r), &EngineConfig::default()).unwrap();
        assert!(gb_equal(
            &r,
            &run.groebner_basis,
            &buchberger(&r, &example(&r))
        ));
        assert!(!gb_equal(&r, &[r.var(0)], &[r.var(1)]));
        assert!(gb_equal(&r, &example(&r), &example(&r)));
    }

    #[test]
    fn standard_representations() {
        let r = ring();
        let f = example(&r);
        let mut cfg = EngineConfig::with_criterion(Criterion::Ratio);
        cfg.module_order = ModuleOrderChoice::Pot;
        let run = gbgc(&r, &f, &cfg).unwrap();
        let report = sgb_spotcheck(&run.context, &run.basis).unwrap();
        assert!(report.pairs_checked >= 1);
        assert!(report.passed(), "{report:?}");

        // a member times a monomial
        let e = run.basis.nonzero()[1]
            .to_sigpoly()
            .scaled(&r, r.field().element(3), &m(&[1, 2]));
        assert!(has_standard_representation(&run.context, &e, &run.basis).unwrap());

        // raw inputs are not an S-Groebner basis
        let ctx = Context::new(r.clone(), ModuleOrder::pot(r.order().clone(), 2), f.clone());
        let mut raw = Basis::new(2);
        for (i, p) in f.iter().enumerate() {
            raw.push_nonzero(SigPoly::generator(&r, i, 2, p.clone(), true));
        }
        let report = sgb_spotcheck(&ctx, &raw).unwrap();
        assert_eq!(report.failures.len(), 1);

        // (e1, x^2 - 1) + (0, y): lead y is divisible by nothing
        let mut odd = raw.nonzero()[0].to_sigpoly();
        odd.poly = r.var(1);
        assert!(!has_standard_representation(&ctx, &odd, &raw).unwrap());
        assert!(!has_divisor_pair(&ctx, &odd.sig, &odd.poly, &raw));

        let mut single = Basis::new(1);
        single.push_nonzero(SigPoly::generator(&r, 0, 1, f[0].clone(), true));
        let ctx1 = Context::new(
            r.clone(),
            ModuleOrder::pot(r.order().clone(), 1),
            alloc::vec![f[0].clone()],
        );
        assert_eq!(sgb_spotcheck(&ctx1, &single).unwrap().pairs_checked, 0);

        let lean = SigPoly {
            vector: None,
            ..odd
        };
        assert!(has_standard_representation(&ctx, &lean, &raw).is_err());
    }
}
