//! Signatures, module orders, labeled module elements and syzygy records.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::ground::{FieldElement, Monomial, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

/// Module monomial `mono * e_index`, with 0-based generator indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    pub index: usize,
    pub mono: Monomial,
}

impl fmt::Debug for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}*e{}", self.mono, self.index + 1)
    }
}

impl Signature {
    pub fn new(index: usize, mono: Monomial) -> Self {
        Self { index, mono }
    }

    /// The unit vector `e_index` over `nvars` variables.
    pub fn unit(index: usize, nvars: usize) -> Self {
        Self {
            index,
            mono: Monomial::one(nvars),
        }
    }

    /// `t * self`.
    pub fn mul(&self, t: &Monomial) -> Self {
        Self {
            index: self.index,
            mono: t.mul(&self.mono),
        }
    }

    pub fn try_mul(&self, t: &Monomial) -> Result<Self> {
        Ok(Self {
            index: self.index,
            mono: t.try_mul(&self.mono)?,
        })
    }

    /// Same index and `self.mono | other.mono`.
    #[inline]
    pub fn divides(&self, other: &Signature) -> bool {
        self.index == other.index && self.mono.divides(&other.mono)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleOrderKind {
    /// Position over term. `rank[i]` is the position of `e_i` in the
    /// precedence list; rank 0 is the largest unit vector.
    Pot { rank: Box<[usize]> },
    /// `a*e_i < b*e_j` iff `lpp(a f_i) < lpp(b f_j)`, or they are equal and
    /// `i > j`. `weights[i]` is `lpp(f_i)`.
    Schreyer { weights: Vec<Monomial> },
}

/// A total order on signatures, compatible with multiplication by monomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    term: TermOrder,
    kind: ModuleOrderKind,
}

impl ModuleOrder {
    /// POT with `e_1 > e_2 > ... > e_m`.
    pub fn pot(term: TermOrder, m: usize) -> Self {
        Self {
            term,
            kind: ModuleOrderKind::Pot {
                rank: (0..m).collect(),
            },
        }
    }

    /// POT where `precedence[0]` is the largest unit vector.
    pub fn pot_with_precedence(term: TermOrder, precedence: &[usize]) -> Result<Self> {
        let m = precedence.len();
        let mut rank = alloc::vec![usize::MAX; m];
        for (r, &i) in precedence.iter().enumerate() {
            if i >= m || rank[i] != usize::MAX {
                return Err(Error::Precondition(
                    "module precedence must be a permutation",
                ));
            }
            rank[i] = r;
        }
        Ok(Self {
            term,
            kind: ModuleOrderKind::Pot { rank: rank.into() },
        })
    }

    /// The Schreyer-like order weighted by the leading power products of the
    /// (nonzero) generators.
    pub fn schreyer(ring: &Ring, generators: &[Polynomial]) -> Result<Self> {
        let weights = generators
            .iter()
            .map(|g| g.lpp().cloned().ok_or(Error::EmptyPolynomial))
            .collect::<Result<Vec<_>>>()?;
        if weights.iter().any(|w| w.nvars() != ring.nvars()) {
            return Err(Error::Dimension {
                expected: ring.nvars(),
                found: weights[0].nvars(),
            });
        }
        Ok(Self {
            term: ring.order().clone(),
            kind: ModuleOrderKind::Schreyer { weights },
        })
    }

    pub fn kind(&self) -> &ModuleOrderKind {
        &self.kind
    }

    pub fn term_order(&self) -> &TermOrder {
        &self.term
    }

    /// Number of generators `m`.
    pub fn len(&self) -> usize {
        match &self.kind {
            ModuleOrderKind::Pot { rank } => rank.len(),
            ModuleOrderKind::Schreyer { weights } => weights.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    fn check(&self, s: &Signature) -> Result<()> {
        if s.index >= self.len() {
            return Err(Error::IndexOutOfRange {
                index: s.index,
                len: self.len(),
            });
        }
        Ok(())
    }

    pub fn try_cmp(&self, s: &Signature, t: &Signature) -> Result<Ordering> {
        self.check(s)?;
        self.check(t)?;
        if s.mono.nvars() != t.mono.nvars() {
            return Err(Error::Dimension {
                expected: s.mono.nvars(),
                found: t.mono.nvars(),
            });
        }
        Ok(self.cmp(s, t))
    }

    #[inline]
    pub fn cmp(&self, s: &Signature, t: &Signature) -> Ordering {
        self.cmp_scaled_impl(None, s, None, t)
    }

    /// Compares `a * s` with `b * t` without forming either product.
    #[inline]
    pub fn cmp_scaled(&self, a: &Monomial, s: &Signature, b: &Monomial, t: &Signature) -> Ordering {
        self.cmp_scaled_impl(Some(a), s, Some(b), t)
    }

    #[inline]
    fn cmp_scaled_impl(
        &self,
        a: Option<&Monomial>,
        s: &Signature,
        b: Option<&Monomial>,
        t: &Signature,
    ) -> Ordering {
        let n = s.mono.nvars();
        let ea = |k: usize| a.map_or(0, |m| m.exponent(k));
        let eb = |k: usize| b.map_or(0, |m| m.exponent(k));
        match &self.kind {
            ModuleOrderKind::Pot { rank } => rank[t.index].cmp(&rank[s.index]).then_with(|| {
                self.term.cmp_by(
                    n,
                    |k| ea(k) + s.mono.exponent(k),
                    |k| eb(k) + t.mono.exponent(k),
                )
            }),
            ModuleOrderKind::Schreyer { weights } => {
                let (ws, wt) = (&weights[s.index], &weights[t.index]);
                self.term
                    .cmp_by(
                        n,
                        |k| ea(k) + s.mono.exponent(k) + ws.exponent(k),
                        |k| eb(k) + t.mono.exponent(k) + wt.exponent(k),
                    )
                    .then_with(|| t.index.cmp(&s.index))
            }
        }
    }

    /// An integer sequence whose lexicographic order agrees with [`ModuleOrder::cmp`].
    pub fn sort_key(&self, s: &Signature) -> Vec<u64> {
        let n = s.mono.nvars();
        let mut out = Vec::with_capacity(n + 2);
        match &self.kind {
            ModuleOrderKind::Pot { rank } => {
                out.push((rank.len() - rank[s.index]) as u64);
                self.term.sort_key_by(n, |k| s.mono.exponent(k), &mut out);
            }
            ModuleOrderKind::Schreyer { weights } => {
                let w = &weights[s.index];
                self.term
                    .sort_key_by(n, |k| s.mono.exponent(k) + w.exponent(k), &mut out);
                out.push((weights.len() - s.index) as u64);
            }
        }
        out
    }

    /// Leading module term of `vector`: its signature and coefficient, or
    /// `None` for the zero vector.
    pub fn vector_lead(&self, vector: &[Polynomial]) -> Option<(Signature, FieldElement)> {
        let mut best: Option<(Signature, FieldElement)> = None;
        for (i, comp) in vector.iter().enumerate() {
            if let Some(t) = comp.terms().first() {
                let cand = Signature::new(i, t.mono.clone());
                if best
                    .as_ref()
                    .is_none_or(|(b, _)| self.cmp(&cand, b) == Ordering::Greater)
                {
                    best = Some((cand, t.coeff));
                }
            }
        }
        best
    }
}

/// An element `(u, f)` of the module carried through reduction: signature
/// `lpp(u)`, the coefficient of that lead, `f`, and optionally `u` itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigPoly {
    pub sig: Signature,
    /// Exact in full-vector mode; constant 1 in signature-only mode, where
    /// only strictly signature-decreasing reductions are performed.
    pub sig_lc: FieldElement,
    pub poly: Polynomial,
    pub vector: Option<Vec<Polynomial>>,
}

impl SigPoly {
    /// `(e_index, f)` for an input generator.
    pub fn generator(
        ring: &Ring,
        index: usize,
        m: usize,
        f: Polynomial,
        full_vector: bool,
    ) -> Self {
        let vector = full_vector.then(|| {
            let mut v = alloc::vec![Polynomial::zero(); m];
            v[index] = ring.constant(FieldElement::ONE);
            v
        });
        Self {
            sig: Signature::unit(index, ring.nvars()),
            sig_lc: FieldElement::ONE,
            poly: f,
            vector,
        }
    }

    /// `c * t * self`.
    pub fn scaled(&self, ring: &Ring, c: FieldElement, t: &Monomial) -> Self {
        Self {
            sig: self.sig.mul(t),
            sig_lc: ring.field().mul(c, self.sig_lc),
            poly: ring.mul_term(c, t, &self.poly),
            vector: self
                .vector
                .as_ref()
                .map(|v| v.iter().map(|p| ring.mul_term(c, t, p)).collect()),
        }
    }
}

/// A nonzero element of the basis `G`, tagged with its insertion serial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledPoly {
    pub serial: usize,
    pub sig: Signature,
    pub sig_lc: FieldElement,
    pub poly: Polynomial,
    pub vector: Option<Vec<Polynomial>>,
}

impl LabeledPoly {
    pub fn from_sigpoly(serial: usize, e: SigPoly) -> Self {
        Self {
            serial,
            sig: e.sig,
            sig_lc: e.sig_lc,
            poly: e.poly,
            vector: e.vector,
        }
    }

    pub fn to_sigpoly(&self) -> SigPoly {
        SigPoly {
            sig: self.sig.clone(),
            sig_lc: self.sig_lc,
            poly: self.poly.clone(),
            vector: self.vector.clone(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SyzygyOrigin {
    /// `f_j e_i - f_i e_j` for input generators `i < j`.
    PrincipalInput { i: usize, j: usize },
    /// `h e_generator - f_generator w` for the basis element `(w, h)` with serial `of`.
    Koszul { of: usize, generator: usize },
    /// A signature-preserving reduction that ended in `h = 0`.
    ZeroReduction,
}

/// An element `(u, 0)` of `G`, kept apart from the nonzero elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyRecord {
    /// Assigned when the record is inserted into a basis.
    pub serial: usize,
    pub sig: Signature,
    pub origin: SyzygyOrigin,
    pub vector: Option<Vec<Polynomial>>,
}

impl SyzygyRecord {
    pub fn new(sig: Signature, origin: SyzygyOrigin, vector: Option<Vec<Polynomial>>) -> Self {
        Self {
            serial: usize::MAX,
            sig,
            origin,
            vector,
        }
    }
}

/// Signatures of the principal syzygies `f_j e_i - f_i e_j`, `i < j`.
///
/// The two components sit at different indices and cannot cancel, so the
/// lead is the larger of `lpp(f_j) e_i` and `lpp(f_i) e_j`, exactly.
pub fn principal_syzygies(
    ring: &Ring,
    inputs: &[Polynomial],
    mo: &ModuleOrder,
    full_vector: bool,
) -> Result<Vec<SyzygyRecord>> {
    let m = inputs.len();
    let mut out = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let (fi, fj) = (&inputs[i], &inputs[j]);
            let a = Signature::new(i, fj.lpp().ok_or(Error::EmptyPolynomial)?.clone());
            let b = Signature::new(j, fi.lpp().ok_or(Error::EmptyPolynomial)?.clone());
            let sig = if mo.cmp(&a, &b) == Ordering::Greater {
                a
            } else {
                b
            };
            let vector = full_vector.then(|| {
                let mut v = alloc::vec![Polynomial::zero(); m];
                v[i] = fj.clone();
                v[j] = ring.neg(fi);
                v
            });
            out.push(SyzygyRecord::new(
                sig,
                SyzygyOrigin::PrincipalInput { i, j },
                vector,
            ));
        }
    }
    Ok(out)
}

/// Signature of the Koszul syzygy `h e_i - f_i w` for a new basis element `(w, h)`.
///
/// With the full vector available the syzygy is built and its lead read off.
/// Otherwise the lead is `max(lpp(h) e_i, lpp(f_i) lpp(w))` unless those two
/// module terms coincide, in which case they might cancel and nothing is
/// recorded.
pub fn koszul_syzygy(
    ring: &Ring,
    new: &LabeledPoly,
    i: usize,
    f_i: &Polynomial,
    mo: &ModuleOrder,
) -> Result<Option<SyzygyRecord>> {
    let h_lead = new
        .poly
        .lpp()
        .ok_or(Error::Precondition("Koszul syzygy of a zero element"))?;
    let fi_lead = f_i.lpp().ok_or(Error::EmptyPolynomial)?;
    if i >= mo.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            len: mo.len(),
        });
    }
    let origin = SyzygyOrigin::Koszul {
        of: new.serial,
        generator: i,
    };
    if let Some(w) = &new.vector {
        let mut v: Vec<Polynomial> = w.iter().map(|wj| ring.neg(&ring.mul(f_i, wj))).collect();
        v[i] = ring.add(&v[i], &new.poly);
        return Ok(mo
            .vector_lead(&v)
            .map(|(sig, _)| SyzygyRecord::new(sig, origin, Some(v))));
    }
    let a = Signature::new(i, h_lead.clone());
    let b = new.sig.mul(fi_lead);
    Ok(match mo.cmp(&a, &b) {
        Ordering::Greater => Some(SyzygyRecord::new(a, origin, None)),
        Ordering::Less => Some(SyzygyRecord::new(b, origin, None)),
        Ordering::Equal => None,
    })
}

/// Checks `sum_i u_i f_i == poly` and `lpp(u) == sig` with lead coefficient `sig_lc`.
pub fn vector_is_consistent(
    ring: &Ring,
    mo: &ModuleOrder,
    inputs: &[Polynomial],
    vector: &[Polynomial],
    sig: &Signature,
    sig_lc: Option<FieldElement>,
    poly: &Polynomial,
) -> bool {
    if vector.len() != inputs.len() {
        return false;
    }
    let mut acc = Polynomial::zero();
    for (u, f) in vector.iter().zip(inputs) {
        if !u.is_zero() {
            acc = ring.add(&acc, &ring.mul(u, f));
        }
    }
    if &acc != poly {
        return false;
    }
    match mo.vector_lead(vector) {
        Some((s, c)) => &s == sig && sig_lc.is_none_or(|lc| lc == c),
        None => false,
    }
}
