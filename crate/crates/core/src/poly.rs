//! Sparse polynomials stored as strictly descending term lists.

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt::Write as _;

use crate::ground::{FieldElement, Monomial, PrimeField, TermOrder};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: FieldElement,
    pub mono: Monomial,
}

/// A polynomial; terms are strictly descending under the owning [`Ring`]'s
/// order, duplicate-free, and carry nonzero coefficients. No terms is zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    #[inline]
    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading power product, `None` for the zero polynomial.
    #[inline]
    pub fn lpp(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.mono)
    }

    /// Leading coefficient, zero for the zero polynomial.
    #[inline]
    pub fn lc(&self) -> FieldElement {
        self.terms.first().map_or(FieldElement::ZERO, |t| t.coeff)
    }

    pub fn into_terms(self) -> Vec<Term> {
        self.terms
    }
}

/// `GF(p)[x1, ..., xn]` with a fixed term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ring {
    field: PrimeField,
    nvars: usize,
    order: TermOrder,
}

impl Ring {
    pub fn new(field: PrimeField, nvars: usize, order: TermOrder) -> Self {
        Self {
            field,
            nvars,
            order,
        }
    }

    #[inline]
    pub fn field(&self) -> &PrimeField {
        &self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.nvars
    }

    #[inline]
    pub fn order(&self) -> &TermOrder {
        &self.order
    }

    pub fn one(&self) -> Monomial {
        Monomial::one(self.nvars)
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        self.monomial_poly(c, self.one())
    }

    pub fn var(&self, var: usize) -> Polynomial {
        self.monomial_poly(FieldElement::ONE, Monomial::var(self.nvars, var))
    }

    pub fn monomial_poly(&self, coeff: FieldElement, mono: Monomial) -> Polynomial {
        if coeff.is_zero() {
            Polynomial::zero()
        } else {
            Polynomial {
                terms: alloc::vec![Term { coeff, mono }],
            }
        }
    }

    /// Builds a canonical polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zero coefficients.
    pub fn from_terms(
        &self,
        terms: impl IntoIterator<Item = (FieldElement, Monomial)>,
    ) -> Result<Polynomial> {
        let mut v: Vec<Term> = Vec::new();
        for (coeff, mono) in terms {
            if mono.nvars() != self.nvars {
                return Err(Error::Dimension {
                    expected: self.nvars,
                    found: mono.nvars(),
                });
            }
            v.push(Term { coeff, mono });
        }
        Ok(self.canonicalize(v))
    }

    fn canonicalize(&self, mut v: Vec<Term>) -> Polynomial {
        v.sort_by(|a, b| self.order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(v.len());
        for t in v {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = self.field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| !t.coeff.is_zero());
        Polynomial { terms: out }
    }

    /// Checks the representation invariants of `p` for this ring.
    pub fn is_canonical(&self, p: &Polynomial) -> bool {
        p.terms.iter().all(|t| {
            !t.coeff.is_zero()
                && t.mono.nvars() == self.nvars
                && t.coeff.value() < self.field.modulus()
        }) && p
            .terms
            .windows(2)
            .all(|w| self.order.cmp(&w[0].mono, &w[1].mono) == Ordering::Greater)
    }

    pub fn lead<'a>(&self, p: &'a Polynomial) -> Result<&'a Term> {
        p.terms.first().ok_or(Error::EmptyPolynomial)
    }

    /// Compares leading power products with the convention `lpp(0) = 0`
    /// below every power product.
    pub fn cmp_lpp(&self, a: &Polynomial, b: &Polynomial) -> Ordering {
        match (a.lpp(), b.lpp()) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(x), Some(y)) => self.order.cmp(x, y),
        }
    }

    fn check(&self, p: &Polynomial) -> Result<()> {
        if let Some(t) = p.terms.first() {
            if t.mono.nvars() != self.nvars {
                return Err(Error::Dimension {
                    expected: self.nvars,
                    found: t.mono.nvars(),
                });
            }
        }
        Ok(())
    }

    pub fn try_add(&self, p: &Polynomial, q: &Polynomial) -> Result<Polynomial> {
        self.check(p)?;
        self.check(q)?;
        Ok(self.add(p, q))
    }

    pub fn add(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.axpy(p, FieldElement::ONE, None, q)
    }

    pub fn sub(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        self.axpy(p, self.field.neg(FieldElement::ONE), None, q)
    }

    pub fn neg(&self, p: &Polynomial) -> Polynomial {
        self.scale(self.field.neg(FieldElement::ONE), p)
    }

    pub fn scale(&self, c: FieldElement, p: &Polynomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(c, t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn make_monic(&self, p: &Polynomial) -> Polynomial {
        match p.terms.first() {
            None => Polynomial::zero(),
            Some(t) if t.coeff == FieldElement::ONE => p.clone(),
            Some(t) => self.scale(self.field.inv(t.coeff).expect("nonzero lead"), p),
        }
    }

    /// `t * p` for a single term `t`.
    pub fn term_scale(&self, t: &Term, p: &Polynomial) -> Polynomial {
        self.mul_term(t.coeff, &t.mono, p)
    }

    pub fn mul_term(&self, c: FieldElement, m: &Monomial, p: &Polynomial) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero();
        }
        // Multiplication by a monomial preserves the order of terms.
        Polynomial {
            terms: p
                .terms
                .iter()
                .map(|t| Term {
                    coeff: self.field.mul(c, t.coeff),
                    mono: m.mul(&t.mono),
                })
                .collect(),
        }
    }

    /// `p + c * m * q`, or `p + c * q` when `m` is `None`, in one merge pass.
    pub fn axpy(
        &self,
        p: &Polynomial,
        c: FieldElement,
        m: Option<&Monomial>,
        q: &Polynomial,
    ) -> Polynomial {
        if c.is_zero() || q.is_zero() {
            return p.clone();
        }
        let f = &self.field;
        let mut out = Vec::with_capacity(p.terms.len() + q.terms.len());
        let mut i = 0;
        let mut qi = q.terms.iter().peekable();
        let next_q = |qi: &mut core::iter::Peekable<core::slice::Iter<'_, Term>>| {
            qi.next().map(|t| Term {
                coeff: f.mul(c, t.coeff),
                mono: match m {
                    Some(m) => m.mul(&t.mono),
                    None => t.mono.clone(),
                },
            })
        };
        let mut cur = next_q(&mut qi);
        while let Some(qt) = cur.take() {
            while i < p.terms.len()
                && self.order.cmp(&p.terms[i].mono, &qt.mono) == Ordering::Greater
            {
                out.push(p.terms[i].clone());
                i += 1;
            }
            if i < p.terms.len() && p.terms[i].mono == qt.mono {
                let s = f.add(p.terms[i].coeff, qt.coeff);
                if !s.is_zero() {
                    out.push(Term {
                        coeff: s,
                        mono: qt.mono,
                    });
                }
                i += 1;
            } else {
                out.push(qt);
            }
            cur = next_q(&mut qi);
        }
        out.extend_from_slice(&p.terms[i..]);
        Polynomial { terms: out }
    }

    /// `p - c * m * q`.
    pub fn sub_scaled(
        &self,
        p: &Polynomial,
        c: FieldElement,
        m: &Monomial,
        q: &Polynomial,
    ) -> Polynomial {
        self.axpy(p, self.field.neg(c), Some(m), q)
    }

    pub fn mul(&self, p: &Polynomial, q: &Polynomial) -> Polynomial {
        let (small, large) = if p.len() <= q.len() { (p, q) } else { (q, p) };
        match small.len() {
            0 => Polynomial::zero(),
            1 => self.term_scale(&small.terms[0], large),
            _ => {
                let mut v = Vec::with_capacity(small.len() * large.len());
                for s in &small.terms {
                    for l in &large.terms {
                        v.push(Term {
                            coeff: self.field.mul(s.coeff, l.coeff),
                            mono: s.mono.mul(&l.mono),
                        });
                    }
                }
                self.canonicalize(v)
            }
        }
    }

    /// Polynomial part of the S-polynomial: `t_f*f - (lc f / lc g) * t_g*g`.
    pub fn spoly(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        let (lf, lg) = (self.lead(f)?, self.lead(g)?);
        let l = lf.mono.lcm(&lg.mono);
        let tf = l.div(&lf.mono);
        let tg = l.div(&lg.mono);
        let c = self.field.div(lf.coeff, lg.coeff)?;
        let left = self.mul_term(FieldElement::ONE, &tf, f);
        Ok(self.sub_scaled(&left, c, &tg, g))
    }

    /// Full reduction of `p` by `basis`: no monomial of the result is
    /// divisible by a leading power product of `basis`.
    pub fn normal_form(&self, p: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        let leads: Vec<(&Polynomial, u64)> = basis
            .iter()
            .filter(|b| !b.is_zero())
            .map(|b| (b, b.terms[0].mono.divmask()))
            .collect();
        let mut rem: Vec<Term> = Vec::new();
        let mut cur = p.clone();
        while let Some(lt) = cur.terms.first() {
            let mask = lt.mono.divmask();
            let reducer = leads
                .iter()
                .find(|(b, bm)| bm & !mask == 0 && b.terms[0].mono.divides(&lt.mono));
            match reducer {
                Some((b, _)) => {
                    let t = lt.mono.div(&b.terms[0].mono);
                    let c = self
                        .field
                        .div(lt.coeff, b.terms[0].coeff)
                        .expect("nonzero lead");
                    cur = self.sub_scaled(&cur, c, &t, b);
                }
                None => {
                    // Move the maximal irreducible prefix in one go.
                    let mut k = 1;
                    while k < cur.terms.len() {
                        let m = &cur.terms[k].mono;
                        let mm = m.divmask();
                        if leads
                            .iter()
                            .any(|(b, bm)| bm & !mm == 0 && b.terms[0].mono.divides(m))
                        {
                            break;
                        }
                        k += 1;
                    }
                    rem.extend(cur.terms.drain(..k));
                }
            }
        }
        Polynomial { terms: rem }
    }

    /// Turns a Gröbner basis into the reduced Gröbner basis: monic, no term
    /// of any member divisible by another member's leading power product,
    /// sorted by ascending leading power product.
    pub fn interreduce(&self, polys: &[Polynomial]) -> Vec<Polynomial> {
        let mut cand: Vec<Polynomial> = polys
            .iter()
            .filter(|p| !p.is_zero())
            .map(|p| self.make_monic(p))
            .collect();
        cand.sort_by(|a, b| self.cmp_lpp(a, b).then_with(|| a.len().cmp(&b.len())));
        // Keep a minimal set of leads: drop anything whose lead is divisible
        // by an earlier (smaller or equal) lead.
        let mut minimal: Vec<Polynomial> = Vec::new();
        for p in cand {
            let l = p.lpp().unwrap();
            if !minimal.iter().any(|q| q.lpp().unwrap().divides(l)) {
                minimal.push(p);
            }
        }
        let mut out = Vec::with_capacity(minimal.len());
        for k in 0..minimal.len() {
            let lead = minimal[k].terms[0].clone();
            let tail = Polynomial {
                terms: minimal[k].terms[1..].to_vec(),
            };
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != k)
                .map(|(_, q)| q.clone())
                .collect();
            let reduced_tail = self.normal_form(&tail, &others);
            let mut terms = alloc::vec![lead];
            terms.extend(reduced_tail.terms);
            out.push(Polynomial { terms });
        }
        out.sort_by(|a, b| self.cmp_lpp(a, b));
        out
    }

    /// Renders `p` as `c*x1^e1*...*xn^en` terms joined by ` + `.
    pub fn render(&self, p: &Polynomial, names: &[&str]) -> String {
        let mut s = String::new();
        if p.is_zero() {
            s.push('0');
            return s;
        }
        for (k, t) in p.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            let _ = write!(s, "{}", t.coeff);
            for (v, &e) in t.mono.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => {
                        let _ = write!(s, "*{}", names[v]);
                    }
                    _ => {
                        let _ = write!(s, "*{}^{}", names[v], e);
                    }
                }
            }
        }
        s
    }

    /// [`Ring::render`] with the default variable names `x1 ... xn`.
    pub fn render_default(&self, p: &Polynomial) -> String {
        let names: Vec<String> = (1..=self.nvars).map(|i| alloc::format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        self.render(p, &refs)
    }
}
