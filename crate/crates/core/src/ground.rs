//! Prime-field coefficients, exponent-vector monomials and term orders.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// Residue in `[0, p)` of some [`PrimeField`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(u64);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    #[inline]
    pub fn value(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The field `GF(p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    /// Conventional benchmark prime.
    pub const DEFAULT_MODULUS: u64 = 32003;

    pub fn new(modulus: u64) -> Result<Self> {
        if !is_prime(modulus) {
            return Err(Error::NotPrime(modulus));
        }
        Ok(Self { modulus })
    }

    #[inline]
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    #[inline]
    pub fn element(&self, value: u64) -> FieldElement {
        FieldElement(value % self.modulus)
    }

    pub fn from_i64(&self, value: i64) -> FieldElement {
        let r = FieldElement(value.unsigned_abs() % self.modulus);
        if value < 0 {
            self.neg(r)
        } else {
            r
        }
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let (s, carry) = a.0.overflowing_add(b.0);
        if carry || s >= self.modulus {
            FieldElement(s.wrapping_sub(self.modulus))
        } else {
            FieldElement(s)
        }
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        if a.0 == 0 {
            a
        } else {
            FieldElement(self.modulus - a.0)
        }
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        if self.modulus <= u32::MAX as u64 {
            FieldElement(a.0 * b.0 % self.modulus)
        } else {
            FieldElement(mul_mod(a.0, b.0, self.modulus))
        }
    }

    /// Multiplicative inverse by the extended Euclidean algorithm.
    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.modulus as i128, a.0 as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let q = r0 / r1;
            (r0, r1) = (r1, r0 - q * r1);
            (s0, s1) = (s1, s0 - q * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(FieldElement(s0.rem_euclid(self.modulus as i128) as u64))
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }
}

#[inline]
fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the first twelve prime bases are exact for all of `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Exponent storage; rings with up to 12 variables never touch the heap.
type Exps = smallvec::SmallVec<[u16; 12]>;

/// Power product `x1^e1 * ... * xn^en`.
///
/// Exponents are `u16`; products that would overflow are rejected by the
/// `try_` operations and abort with a diagnostic in the panicking ones.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    exps: Exps,
    deg: u32,
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", &self.exps[..])
    }
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: smallvec::smallvec![0; nvars],
            deg: 0,
        }
    }

    /// The monomial `x_var`.
    pub fn var(nvars: usize, var: usize) -> Self {
        let mut e: Exps = smallvec::smallvec![0; nvars];
        e[var] = 1;
        Self { exps: e, deg: 1 }
    }

    pub fn new(exps: &[u32]) -> Result<Self> {
        let mut out = Exps::with_capacity(exps.len());
        let mut deg: u32 = 0;
        for &e in exps {
            let e16 = u16::try_from(e).map_err(|_| Error::ExponentOverflow)?;
            deg = deg.checked_add(e).ok_or(Error::ExponentOverflow)?;
            out.push(e16);
        }
        Ok(Self { exps: out, deg })
    }

    fn from_exps(exps: Exps) -> Self {
        let deg = exps.iter().map(|&e| e as u32).sum();
        Self { exps, deg }
    }

    #[inline]
    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    #[inline]
    pub fn exponent(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.deg
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    /// One bit per variable (mod 64) that occurs with a positive exponent.
    /// `a | b` implies `mask(a) & !mask(b) == 0`.
    #[inline]
    pub fn divmask(&self) -> u64 {
        let mut m = 0u64;
        for (k, &e) in self.exps.iter().enumerate() {
            if e > 0 {
                m |= 1 << (k & 63);
            }
        }
        m
    }

    fn check_len(&self, other: &Self) -> Result<()> {
        if self.exps.len() != other.exps.len() {
            return Err(Error::Dimension {
                expected: self.exps.len(),
                found: other.exps.len(),
            });
        }
        Ok(())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        let mut out = self.exps.clone();
        for (a, b) in out.iter_mut().zip(other.exps.iter()) {
            *a = a.checked_add(*b).ok_or(Error::ExponentOverflow)?;
        }
        Ok(Self {
            exps: out,
            deg: self.deg + other.deg,
        })
    }

    /// Product. Panics on a variable-count mismatch or exponent overflow.
    pub fn mul(&self, other: &Self) -> Self {
        match self.try_mul(other) {
            Ok(m) => m,
            Err(e) => panic!("monomial product {self:?} * {other:?}: {e}"),
        }
    }

    /// Quotient `self / divisor`; fails unless `divisor | self`.
    pub fn try_div(&self, divisor: &Self) -> Result<Self> {
        self.check_len(divisor)?;
        let mut out = self.exps.clone();
        for (a, b) in out.iter_mut().zip(divisor.exps.iter()) {
            *a = a.checked_sub(*b).ok_or(Error::NotDivisible)?;
        }
        Ok(Self {
            exps: out,
            deg: self.deg - divisor.deg,
        })
    }

    pub fn div(&self, divisor: &Self) -> Self {
        match self.try_div(divisor) {
            Ok(m) => m,
            Err(e) => panic!("monomial quotient {self:?} / {divisor:?}: {e}"),
        }
    }

    pub fn try_divides(&self, other: &Self) -> Result<bool> {
        self.check_len(other)?;
        Ok(self.divides(other))
    }

    /// `self | other`.
    #[inline]
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.deg <= other.deg && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    pub fn try_lcm(&self, other: &Self) -> Result<Self> {
        self.check_len(other)?;
        Ok(self.lcm(other))
    }

    pub fn lcm(&self, other: &Self) -> Self {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "lcm of monomials over different rings"
        );
        Self::from_exps(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn gcd(&self, other: &Self) -> Self {
        assert_eq!(
            self.exps.len(),
            other.exps.len(),
            "gcd of monomials over different rings"
        );
        Self::from_exps(
            self.exps
                .iter()
                .zip(other.exps.iter())
                .map(|(a, b)| *a.min(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.exps
            .iter()
            .zip(other.exps.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TermOrderKind {
    Lex,
    Grlex,
    Grevlex,
}

impl TermOrderKind {
    pub fn name(self) -> &'static str {
        match self {
            TermOrderKind::Lex => "lex",
            TermOrderKind::Grlex => "grlex",
            TermOrderKind::Grevlex => "grevlex",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        match name {
            "lex" => Some(TermOrderKind::Lex),
            "grlex" => Some(TermOrderKind::Grlex),
            "grevlex" => Some(TermOrderKind::Grevlex),
            _ => None,
        }
    }
}

/// A total, multiplicative well-order on monomials.
///
/// `precedence[0]` is the most significant variable. `None` means declaration
/// order `x1 > x2 > ... > xn`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TermOrder {
    kind: TermOrderKind,
    precedence: Option<Box<[usize]>>,
}

impl TermOrder {
    pub fn new(kind: TermOrderKind) -> Self {
        Self {
            kind,
            precedence: None,
        }
    }

    pub fn grevlex() -> Self {
        Self::new(TermOrderKind::Grevlex)
    }

    pub fn with_precedence(kind: TermOrderKind, precedence: &[usize]) -> Result<Self> {
        let mut seen = alloc::vec![false; precedence.len()];
        for &v in precedence {
            if v >= precedence.len() || seen[v] {
                return Err(Error::Precondition(
                    "variable precedence must be a permutation",
                ));
            }
            seen[v] = true;
        }
        let identity = precedence.iter().enumerate().all(|(k, &v)| k == v);
        Ok(Self {
            kind,
            precedence: if identity {
                None
            } else {
                Some(precedence.into())
            },
        })
    }

    #[inline]
    pub fn kind(&self) -> TermOrderKind {
        self.kind
    }

    #[inline]
    fn var_at(&self, rank: usize) -> usize {
        match &self.precedence {
            None => rank,
            Some(p) => p[rank],
        }
    }

    pub fn try_cmp(&self, a: &Monomial, b: &Monomial) -> Result<Ordering> {
        a.check_len(b)?;
        Ok(self.cmp(a, b))
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.nvars(), b.nvars());
        if self.precedence.is_none() {
            // Fast path for declaration order.
            match self.kind {
                TermOrderKind::Lex => return a.exps.cmp(&b.exps),
                TermOrderKind::Grlex => {
                    return a.deg.cmp(&b.deg).then_with(|| a.exps.cmp(&b.exps));
                }
                TermOrderKind::Grevlex => {
                    return a.deg.cmp(&b.deg).then_with(|| {
                        for (x, y) in a.exps.iter().zip(b.exps.iter()).rev() {
                            if x != y {
                                return y.cmp(x);
                            }
                        }
                        Ordering::Equal
                    });
                }
            }
        }
        self.cmp_by(a.nvars(), |k| a.exps[k] as u32, |k| b.exps[k] as u32)
    }

    /// Compares two monomials given by exponent accessors over `nvars` variables.
    #[inline]
    pub fn cmp_by(
        &self,
        nvars: usize,
        ea: impl Fn(usize) -> u32,
        eb: impl Fn(usize) -> u32,
    ) -> Ordering {
        let graded = || {
            let da: u32 = (0..nvars).map(&ea).sum();
            let db: u32 = (0..nvars).map(&eb).sum();
            da.cmp(&db)
        };
        match self.kind {
            TermOrderKind::Lex => self.lex_tail(nvars, &ea, &eb),
            TermOrderKind::Grlex => graded().then_with(|| self.lex_tail(nvars, &ea, &eb)),
            TermOrderKind::Grevlex => graded().then_with(|| {
                for rank in (0..nvars).rev() {
                    let v = self.var_at(rank);
                    let (x, y) = (ea(v), eb(v));
                    if x != y {
                        return y.cmp(&x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    fn lex_tail(
        &self,
        nvars: usize,
        ea: &impl Fn(usize) -> u32,
        eb: &impl Fn(usize) -> u32,
    ) -> Ordering {
        for rank in 0..nvars {
            let v = self.var_at(rank);
            let (x, y) = (ea(v), eb(v));
            if x != y {
                return x.cmp(&y);
            }
        }
        Ordering::Equal
    }

    /// Compares `a1 * a2` with `b1 * b2` without forming the products.
    #[inline]
    pub fn cmp_products(
        &self,
        a1: &Monomial,
        a2: &Monomial,
        b1: &Monomial,
        b2: &Monomial,
    ) -> Ordering {
        self.cmp_by(
            a1.nvars(),
            |k| a1.exps[k] as u32 + a2.exps[k] as u32,
            |k| b1.exps[k] as u32 + b2.exps[k] as u32,
        )
    }

    /// An integer sequence whose lexicographic order agrees with this term
    /// order on exponent vectors given by `e`.
    pub fn sort_key_by(&self, nvars: usize, e: impl Fn(usize) -> u32, out: &mut Vec<u64>) {
        let graded = |out: &mut Vec<u64>| out.push((0..nvars).map(&e).map(u64::from).sum());
        match self.kind {
            TermOrderKind::Lex => out.extend((0..nvars).map(|r| e(self.var_at(r)) as u64)),
            TermOrderKind::Grlex => {
                graded(out);
                out.extend((0..nvars).map(|r| e(self.var_at(r)) as u64));
            }
            TermOrderKind::Grevlex => {
                graded(out);
                out.extend(
                    (0..nvars)
                        .rev()
                        .map(|r| u64::from(u32::MAX) - e(self.var_at(r)) as u64),
                );
            }
        }
    }

    pub fn sort_key(&self, m: &Monomial) -> Vec<u64> {
        let mut out = Vec::with_capacity(m.nvars() + 1);
        self.sort_key_by(m.nvars(), |k| m.exps[k] as u32, &mut out);
        out
    }
}
