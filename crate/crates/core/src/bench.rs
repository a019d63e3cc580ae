//! The cyclic-n and Katsura benchmark families.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::ground::{FieldElement, Monomial, PrimeField, TermOrder};
use crate::poly::{Polynomial, Ring};
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub struct BenchmarkSystem {
    pub name: String,
    pub ring: Ring,
    pub var_names: Vec<String>,
    pub polys: Vec<Polynomial>,
    /// Size of the reduced Gröbner basis under grevlex, when known.
    pub expected_gb_size: Option<usize>,
}

/// Known reduced grevlex basis sizes of cyclic-n.
fn cyclic_gb_size(n: usize) -> Option<usize> {
    match n {
        5 => Some(20),
        6 => Some(45),
        _ => None,
    }
}

/// Variables `x1..xn`; for `k = 1..n-1` the sum over all cyclic shifts of
/// the product of `k` consecutive variables, then `x1 * ... * xn - 1`.
pub fn cyclic(field: PrimeField, n: usize) -> Result<BenchmarkSystem> {
    if n < 2 {
        return Err(Error::Precondition("cyclic-n needs n >= 2"));
    }
    let ring = Ring::new(field, n, TermOrder::grevlex());
    let mut polys = Vec::with_capacity(n);
    for k in 1..n {
        let terms = (0..n).map(|i| {
            let mut e = alloc::vec![0u32; n];
            for j in 0..k {
                e[(i + j) % n] += 1;
            }
            (
                FieldElement::ONE,
                Monomial::new(&e).expect("small exponents"),
            )
        });
        polys.push(ring.from_terms(terms)?);
    }
    let all = Monomial::new(&alloc::vec![1u32; n])?;
    polys.push(ring.from_terms([(FieldElement::ONE, all), (field.from_i64(-1), ring.one())])?);
    Ok(BenchmarkSystem {
        name: format!("cyclic{n}"),
        var_names: (1..=n).map(|i| format!("x{i}")).collect(),
        ring,
        polys,
        expected_gb_size: cyclic_gb_size(n),
    })
}

/// Variables `x0..xk`: `x0 + 2 (x1 + ... + xk) - 1`, and for `m = 0..k-1`
/// `sum_{i=-k..k} x_|i| x_|m-i| - x_m`, where `x_j = 0` for `j > k`.
pub fn katsura(field: PrimeField, k: usize) -> Result<BenchmarkSystem> {
    if k < 1 {
        return Err(Error::Precondition("Katsura needs k >= 1"));
    }
    let n = k + 1;
    let ring = Ring::new(field, n, TermOrder::grevlex());
    let var = |j: usize| Monomial::var(n, j);
    let mut polys = Vec::with_capacity(n);

    let mut linear = alloc::vec![
        (FieldElement::ONE, var(0)),
        (field.from_i64(-1), ring.one())
    ];
    linear.extend((1..n).map(|j| (field.element(2), var(j))));
    polys.push(ring.from_terms(linear)?);

    let k = k as i64;
    for m in 0..k {
        let mut terms = Vec::new();
        for i in -k..=k {
            let (a, b) = (i.unsigned_abs() as usize, (m - i).unsigned_abs() as usize);
            if b < n {
                terms.push((FieldElement::ONE, var(a).mul(&var(b))));
            }
        }
        terms.push((field.from_i64(-1), var(m as usize)));
        polys.push(ring.from_terms(terms)?);
    }
    Ok(BenchmarkSystem {
        name: format!("katsura{k}"),
        var_names: (0..n).map(|i| format!("x{i}")).collect(),
        ring,
        polys,
        expected_gb_size: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(s: &BenchmarkSystem) -> Vec<&str> {
        s.var_names.iter().map(String::as_str).collect()
    }

    fn rendered(s: &BenchmarkSystem) -> Vec<String> {
        s.polys
            .iter()
            .map(|p| s.ring.render(p, &names(s)))
            .collect()
    }

    #[test]
    fn cyclic_instances() {
        let f = PrimeField::new(32003).unwrap();
        let c3 = cyclic(f, 3).unwrap();
        assert_eq!(
            rendered(&c3),
            [
                "1*x1 + 1*x2 + 1*x3",
                "1*x1*x2 + 1*x1*x3 + 1*x2*x3",
                "1*x1*x2*x3 + 32002"
            ]
        );
        let c2 = cyclic(f, 2).unwrap();
        assert_eq!(rendered(&c2), ["1*x1 + 1*x2", "1*x1*x2 + 32002"]);
        assert_eq!(cyclic(f, 5).unwrap().expected_gb_size, Some(20));
        assert!(cyclic(f, 1).is_err());
    }

    #[test]
    fn katsura_instances() {
        let f = PrimeField::new(32003).unwrap();
        let k1 = katsura(f, 1).unwrap();
        assert_eq!(
            rendered(&k1),
            ["1*x0 + 2*x1 + 32002", "1*x0^2 + 2*x1^2 + 32002*x0"]
        );
        let k2 = katsura(f, 2).unwrap();
        assert_eq!((k2.ring.nvars(), k2.polys.len()), (3, 3));
        assert!(katsura(f, 0).is_err());
        let again = katsura(f, 4).unwrap();
        assert_eq!(rendered(&again), rendered(&katsura(f, 4).unwrap()));
    }
}
