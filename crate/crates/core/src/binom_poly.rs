//! Integer-valued polynomials in a shifted binomial basis `{C(x−s, m)}`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

/// `C(a, m) = a(a−1)…(a−m+1) / m!` for any integer `a`.
///
/// Zero for `0 <= a < m`, signed for negative `a`.
pub fn binomial(a: &BigInt, m: usize) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..m {
        num *= a - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    debug_assert!((&num % &den).is_zero());
    num / den
}

pub fn binomial_i64(a: i64, m: usize) -> BigInt {
    binomial(&BigInt::from(a), m)
}

/// `Σ_m coeffs[m] · C(x − shift, m)`.
///
/// Trailing zero coefficients are trimmed, so the representation is unique
/// for a given shift and `coeffs` is empty exactly for the zero polynomial.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BinomPoly {
    shift: i64,
    #[serde(with = "crate::render::big_seq")]
    coeffs: Vec<BigInt>,
}

impl BinomPoly {
    pub fn new(shift: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = BinomPoly { shift, coeffs };
        p.trim();
        p
    }

    pub fn from_i64(shift: i64, coeffs: &[i64]) -> Self {
        BinomPoly::new(shift, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero(shift: i64) -> Self {
        BinomPoly::new(shift, Vec::new())
    }

    pub fn constant(shift: i64, c: BigInt) -> Self {
        BinomPoly::new(shift, vec![c])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `C(x − shift, m)`; zero past the degree.
    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let a = BigInt::from(x - self.shift);
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| c * binomial(&a, m))
            .sum()
    }

    /// Re-expands in `{C(x − new_shift, j)}` using Vandermonde's identity
    /// `C(x−s, m) = Σ_j C(t−s, m−j) · C(x−t, j)`.
    pub fn reshift(&self, new_shift: i64) -> BinomPoly {
        if new_shift == self.shift {
            return self.clone();
        }
        let delta = BigInt::from(new_shift - self.shift);
        let table: Vec<BigInt> = (0..self.coeffs.len())
            .map(|i| binomial(&delta, i))
            .collect();
        let coeffs = (0..self.coeffs.len())
            .map(|j| {
                self.coeffs[j..]
                    .iter()
                    .enumerate()
                    .map(|(i, c)| c * &table[i])
                    .sum()
            })
            .collect();
        BinomPoly::new(new_shift, coeffs)
    }

    /// Same polynomial function, regardless of basis.
    pub fn same_function(&self, other: &BinomPoly) -> bool {
        self.reshift(other.shift) == *other
    }
}

/// The unique polynomial of degree `< values.len()` with
/// `p(shift + i) = values[i]`, expanded around `shift`.
///
/// Coefficient `m` is the `m`-th forward difference of `values` at index 0.
pub fn interpolate(values: &[BigInt], shift: i64) -> BinomPoly {
    let mut row = values.to_vec();
    let mut coeffs = Vec::with_capacity(values.len());
    while !row.is_empty() {
        coeffs.push(row[0].clone());
        row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
    }
    BinomPoly::new(shift, coeffs)
}

impl fmt::Display for BinomPoly {
    /// Plain-text form like `5C(n-3,6) -5C(n-3,5) +2C(n-3,4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = crate::render::shifted_var("n", self.shift);
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if first {
                write!(f, "{c}C({var},{m})")?;
                first = false;
            } else {
                let sign = if c.is_negative() { '-' } else { '+' };
                write!(f, " {sign}{}C({var},{m})", c.abs())?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn binomial_conventions() {
        assert_eq!(binomial_i64(5, 2), BigInt::from(10));
        assert_eq!(binomial_i64(2, 5), BigInt::from(0));
        assert_eq!(binomial_i64(0, 0), BigInt::from(1));
        assert_eq!(binomial_i64(-1, 3), BigInt::from(-1));
        assert_eq!(binomial_i64(-2, 2), BigInt::from(3));
    }

    #[test]
    fn eval_examples() {
        let c = BinomPoly::from_i64(2, &[1]);
        for x in -5..10 {
            assert_eq!(c.eval(x), BigInt::from(1));
        }
        let f = BinomPoly::from_i64(0, &[0, 0, 0, 0, 2, -5, 5]);
        assert_eq!(f.eval(9), BigInt::from(42));
        assert_eq!(BinomPoly::zero(3).eval(17), BigInt::from(0));
        assert_eq!(f.degree(), Some(6));
        assert_eq!(BinomPoly::zero(0).degree(), None);
    }

    #[test]
    fn reshift_examples() {
        let f = BinomPoly::from_i64(0, &[0, 0, 0, 0, 2, -5, 5]);
        let g = f.reshift(1);
        assert_eq!(g, BinomPoly::from_i64(1, &[0, 0, 0, 2, -3, 0, 5]));
        assert_eq!(f.reshift(0), f);
        let c = BinomPoly::from_i64(4, &[7]);
        assert_eq!(c.reshift(-2), BinomPoly::from_i64(-2, &[7]));
    }

    #[test]
    fn interpolate_examples() {
        assert_eq!(
            interpolate(&ints(&[1, 1, 1]), 5),
            BinomPoly::from_i64(5, &[1])
        );
        assert_eq!(
            interpolate(&ints(&[0, 1, 2, 3]), 0),
            BinomPoly::from_i64(0, &[0, 1])
        );
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let p = BinomPoly::from_i64(0, &[1, 2, 0, 0]);
        assert_eq!(p.coeffs().len(), 2);
        assert_eq!(p, BinomPoly::from_i64(0, &[1, 2]));
    }

    #[test]
    fn display() {
        let f = BinomPoly::from_i64(3, &[0, -1, 1, -1, 2, -5, 5]);
        assert_eq!(
            f.to_string(),
            "5C(n-3,6) -5C(n-3,5) +2C(n-3,4) -1C(n-3,3) +1C(n-3,2) -1C(n-3,1)"
        );
        assert_eq!(BinomPoly::from_i64(0, &[1]).to_string(), "1C(n,0)");
    }

    #[test]
    fn json_form() {
        let p = BinomPoly::from_i64(3, &[1, -2]);
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"shift":3,"coeffs":[1,-2]}"#);
        let back: BinomPoly = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        let huge = BinomPoly::new(0, vec![BigInt::from(10).pow(40)]);
        let back: BinomPoly = serde_json::from_str(&serde_json::to_string(&huge).unwrap()).unwrap();
        assert_eq!(back, huge);
    }

    fn poly_strategy() -> impl Strategy<Value = BinomPoly> {
        (-3i64..=8, prop::collection::vec(-1000i64..1000, 0..=9))
            .prop_map(|(s, c)| BinomPoly::from_i64(s, &c))
    }

    proptest! {
        #[test]
        fn interpolate_inverts_eval(p in poly_strategy()) {
            let d = p.coeffs().len();
            let values: Vec<BigInt> = (0..d as i64).map(|i| p.eval(p.shift() + i)).collect();
            prop_assert_eq!(interpolate(&values, p.shift()), p);
        }

        #[test]
        fn reshift_preserves_values(p in poly_strategy(), t in -5i64..12) {
            let q = p.reshift(t);
            for x in -4..16 {
                prop_assert_eq!(p.eval(x), q.eval(x));
            }
            prop_assert_eq!(q.reshift(p.shift()), p);
        }

        #[test]
        fn coefficients_are_forward_differences(values in prop::collection::vec(-500i64..500, 1..10)) {
            let values = ints(&values);
            let p = interpolate(&values, 0);
            let mut row = values.clone();
            for m in 0..values.len() {
                prop_assert_eq!(p.coeff(m), row[0].clone());
                row = row.windows(2).map(|w| &w[1] - &w[0]).collect();
            }
        }
    }
}
