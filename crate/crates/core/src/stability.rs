//! Coefficients of `χ^{(n−k,λ)}(σ_r)` in the basis `{C(n−r, k−h)}`.
//!
//! Write
//!
//! ```text
//! χ^{(n−k,λ)}(σ_r) = Σ_{h=0}^{k} (−1)^h · b_h · C(n−r, k−h)
//! ```
//!
//! Then `b_h = Σ_{ν ∈ Γ^r_h} ε^r_ν · f^{λ∖ν}` where `Γ^r_h` is the set of
//! `r`-primary partitions of `h` and `ε^r_ν` their signs. The `b_h` here are
//! stored with the `(−1)^h` stripped; [`CharPolyExpansion::poly`] applies it
//! when building the [`BinomPoly`].

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::binom_poly::BinomPoly;
use crate::characters::hook_cycle_value;
use crate::partitions::Partition;
use crate::tableaux::{a_coeff, dim_syt, skew_count};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StabilityError {
    #[error("closed form {case:?} is only defined for k >= {min}, got k = {k}")]
    CaseNotDefined {
        case: Basis2Case,
        k: usize,
        min: usize,
    },
}

/// Which clause of the `r`-primary definition a partition comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `(1^t)`, `0 <= t <= r−1`, sign `+`.
    Column,
    /// `(r−u−v, 2^u, 1^v)`, `u + v <= r−2`, sign `(−1)^{r−u−v}`.
    TypeTwo,
    /// `(r+1−u, 2^u, 1^v)`, `0 <= u <= r−1`, sign `(−1)^{r−u}`.
    TypeThree,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::Column => "column",
            Family::TypeTwo => "typetwo",
            Family::TypeThree => "typethree",
        })
    }
}

/// An `r`-primary partition with its `r`-sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    pub partition: Partition,
    pub sign: i32,
    pub family: Family,
}

fn parity_sign(e: usize) -> i32 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// `(first, 2^u, 1^v)`.
fn two_one_shape(first: usize, u: usize, v: usize) -> Partition {
    let mut parts = vec![first];
    parts.extend(std::iter::repeat_n(2, u));
    parts.extend(std::iter::repeat_n(1, v));
    Partition::new(parts).expect("first part is at least 2")
}

/// `Γ^r_h`: columns first, then the second family by `v`, then the third by
/// `u`.
pub fn r_primary(r: usize, h: usize) -> Vec<SignedPartition> {
    assert!(r >= 1, "r must be positive");
    let mut out = Vec::new();
    if h < r {
        out.push(SignedPartition {
            partition: Partition::column(h),
            sign: 1,
            family: Family::Column,
        });
    }
    // (r−u−v, 2^u, 1^v) has size r+u, so u = h − r.
    if h >= r && r >= 2 {
        let u = h - r;
        if u <= r - 2 {
            for v in 0..=(r - 2 - u) {
                out.push(SignedPartition {
                    partition: two_one_shape(r - u - v, u, v),
                    sign: parity_sign(r - u - v),
                    family: Family::TypeTwo,
                });
            }
        }
    }
    // (r+1−u, 2^u, 1^v) has size r+1+u+v.
    if h > r {
        for u in 0..=(h - r - 1).min(r - 1) {
            let v = h - r - 1 - u;
            out.push(SignedPartition {
                partition: two_one_shape(r + 1 - u, u, v),
                sign: parity_sign(r - u),
                family: Family::TypeThree,
            });
        }
    }
    debug_assert!(
        out.iter()
            .enumerate()
            .all(|(i, a)| out[i + 1..].iter().all(|b| a.partition != b.partition)),
        "families overlap for r={r}, h={h}"
    );
    out
}

/// `ε^r_λ` if `λ` is `r`-primary, read off the shape directly.
pub fn r_sign(lambda: &Partition, r: usize) -> Option<(i32, Family)> {
    assert!(r >= 1, "r must be positive");
    if lambda.is_column() {
        return (lambda.size() < r).then_some((1, Family::Column));
    }
    let rest = &lambda.parts()[1..];
    if rest.iter().any(|&p| p > 2) {
        return None;
    }
    let first = lambda.first();
    let u = rest.iter().filter(|&&p| p == 2).count();
    let v = rest.len() - u;
    if u + v + 2 <= r && first == r - u - v {
        return Some((parity_sign(r - u - v), Family::TypeTwo));
    }
    if u < r && first == r + 1 - u {
        return Some((parity_sign(r - u), Family::TypeThree));
    }
    None
}

/// `Σ_{ν} ε_ν · f^{λ∖ν}` over an explicit signed family.
pub fn coeff_b_over(lambda: &Partition, family: &[SignedPartition]) -> BigInt {
    family
        .iter()
        .map(|sp| BigInt::from(skew_count(lambda, &sp.partition)) * sp.sign)
        .sum()
}

/// `b^{(r)}_{λ,h} = Σ_{ν ∈ Γ^r_h} ε^r_ν f^{λ∖ν}`.
pub fn coeff_b(lambda: &Partition, h: usize, r: usize) -> BigInt {
    if h > lambda.size() {
        return BigInt::zero();
    }
    coeff_b_over(lambda, &r_primary(r, h))
}

/// `(b⁺, b⁻)` for a transposition: `(f^{λ∖(h)}, 0)` when `h <= 3`, otherwise
/// `(f^{λ∖(3,1^{h−3})}, f^{λ∖(2,2,1^{h−4})})`.
pub fn coeff_b_transposition_split(lambda: &Partition, h: usize) -> (BigUint, BigUint) {
    if h <= 3 {
        return (skew_count(lambda, &Partition::row(h)), BigUint::zero());
    }
    let plus = two_one_shape(3, 0, h - 3);
    let minus = two_one_shape(2, 1, h - 4);
    (skew_count(lambda, &plus), skew_count(lambda, &minus))
}

/// `χ^{(n−k,λ)}(σ_r)` as a coefficient vector `b_0..b_k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharPolyExpansion {
    lambda: Partition,
    r: usize,
    k: usize,
    shift: i64,
    #[serde(with = "crate::render::big_seq")]
    b: Vec<BigInt>,
}

impl CharPolyExpansion {
    pub fn new(lambda: Partition, r: usize, b: Vec<BigInt>) -> Self {
        let k = lambda.size();
        assert_eq!(b.len(), k + 1, "need b_0..b_k");
        CharPolyExpansion {
            lambda,
            r,
            k,
            shift: r as i64,
            b,
        }
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// `b_0..b_k` without the `(−1)^h` sign.
    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// `Σ_h (−1)^h b_h C(x − r, k − h)`.
    pub fn poly(&self) -> BinomPoly {
        let mut coeffs = vec![BigInt::zero(); self.k + 1];
        for (h, b) in self.b.iter().enumerate() {
            coeffs[self.k - h] = if h % 2 == 0 { b.clone() } else { -b };
        }
        BinomPoly::new(self.shift, coeffs)
    }

    /// The value at `n`; matches the character for `n >= k + λ_1 + r`.
    pub fn eval(&self, n: i64) -> BigInt {
        self.poly().eval(n)
    }

    /// Smallest `n` where the polynomial is asserted to equal the character.
    pub fn strict_start(&self) -> usize {
        self.k + self.lambda.first() + self.r
    }
}

/// The full expansion for `λ` on an `r`-cycle.
pub fn char_poly(lambda: &Partition, r: usize) -> CharPolyExpansion {
    char_poly_with(lambda, r, r_primary)
}

/// [`char_poly`] with a caller-supplied replacement for `Γ^r_h`.
pub fn char_poly_with<F>(lambda: &Partition, r: usize, primaries: F) -> CharPolyExpansion
where
    F: Fn(usize, usize) -> Vec<SignedPartition>,
{
    assert!(r >= 1, "r must be positive");
    let b = (0..=lambda.size())
        .map(|h| coeff_b_over(lambda, &primaries(r, h)))
        .collect();
    CharPolyExpansion::new(lambda.clone(), r, b)
}

/// `f^{(n−k,λ)} = Σ_h (−1)^h a_{λ,h} C(n, k−h)`.
pub fn dim_poly(lambda: &Partition) -> BinomPoly {
    let k = lambda.size();
    let mut coeffs = vec![BigInt::zero(); k + 1];
    for h in 0..=lambda.len().min(k) {
        let a = BigInt::from(a_coeff(lambda, h));
        coeffs[k - h] = if h % 2 == 0 { a } else { -a };
    }
    BinomPoly::new(0, coeffs)
}

/// `f^{(n−k,λ)} = f^λ C(n−1,k) − Σ_{h≥2} (−1)^h f^{λ∖(2,1^{h−2})} C(n−1,k−h)`.
pub fn dim_poly_alt(lambda: &Partition) -> BinomPoly {
    let k = lambda.size();
    let mut coeffs = vec![BigInt::zero(); k + 1];
    coeffs[k] = BigInt::from(dim_syt(lambda));
    for h in 2..=k {
        let f = BigInt::from(skew_count(lambda, &two_one_shape(2, 0, h - 2)));
        coeffs[k - h] = if h % 2 == 0 { -f } else { f };
    }
    BinomPoly::new(1, coeffs)
}

/// `b^{(r)}_{λ,k}`: `ε^r_λ` when `λ` is `r`-primary, else zero.
pub fn constant_coeff(lambda: &Partition, r: usize) -> i32 {
    r_sign(lambda, r).map_or(0, |(s, _)| s)
}

/// `b^{(r)}_{λ,k}` from the vertical-strip expansion: only `κ = ∅` (when `λ`
/// itself is a vertical strip) and `κ ⊢ r` contribute, the latter with
/// `(−1)^r χ^κ(σ_r)`.
pub fn constant_coeff_vertical_strips(lambda: &Partition, r: usize) -> i32 {
    assert!(r >= 1, "r must be positive");
    lambda
        .vertical_strip_inners()
        .iter()
        .map(|kappa| match kappa.size() {
            0 => 1,
            s if s == r => parity_sign(r) * hook_cycle_value(kappa),
            _ => 0,
        })
        .sum()
}

/// The four shapes whose transposition expansions have a closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis2Case {
    /// `(1^k)`, `k >= 0`.
    Column,
    /// `(2, 1^{k−2})`, `k >= 2`.
    TwoHook,
    /// `(3, 1^{k−3})`, `k >= 3`.
    ThreeHook,
    /// `(2, 2, 1^{k−4})`, `k >= 4`.
    TwoTwo,
}

impl Basis2Case {
    pub const ALL: [Basis2Case; 4] = [
        Basis2Case::Column,
        Basis2Case::TwoHook,
        Basis2Case::ThreeHook,
        Basis2Case::TwoTwo,
    ];

    pub fn min_k(self) -> usize {
        match self {
            Basis2Case::Column => 0,
            Basis2Case::TwoHook => 2,
            Basis2Case::ThreeHook => 3,
            Basis2Case::TwoTwo => 4,
        }
    }

    pub fn partition(self, k: usize) -> Result<Partition, StabilityError> {
        self.check(k)?;
        Ok(match self {
            Basis2Case::Column => Partition::column(k),
            Basis2Case::TwoHook => two_one_shape(2, 0, k - 2),
            Basis2Case::ThreeHook => two_one_shape(3, 0, k - 3),
            Basis2Case::TwoTwo => two_one_shape(2, 1, k - 4),
        })
    }

    fn check(self, k: usize) -> Result<(), StabilityError> {
        if k < self.min_k() {
            return Err(StabilityError::CaseNotDefined {
                case: self,
                k,
                min: self.min_k(),
            });
        }
        Ok(())
    }
}

/// One displayed term `coeff · C(n−2, lower)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigInt,
    pub lower: usize,
}

fn term(coeff: impl Into<BigInt>, lower: usize) -> Term {
    Term {
        coeff: coeff.into(),
        lower,
    }
}

/// The closed forms for `χ^{(n−k,λ)}(τ)`, term by term as displayed,
/// including explicit zero terms.
pub fn basis2_terms(case: Basis2Case, k: usize) -> Result<Vec<Term>, StabilityError> {
    case.check(k)?;
    let k_i = k as i64;
    let alt = |h: usize| if h.is_multiple_of(2) { 1i64 } else { -1 };
    let terms = match case {
        Basis2Case::Column if k == 0 => vec![term(1, 0)],
        Basis2Case::Column => vec![term(1, k), term(-1, k - 1)],
        Basis2Case::TwoHook => vec![term(k_i - 1, k), term(-(k_i - 1), k - 1), term(1, k - 2)],
        Basis2Case::ThreeHook => {
            let c = (k_i - 1) * (k_i - 2) / 2;
            let mut t = vec![term(c, k), term(-c, k - 1), term(k_i - 2, k - 2)];
            t.extend((3..=k).map(|h| term(alt(h), k - h)));
            t
        }
        Basis2Case::TwoTwo => {
            let c = k_i * (k_i - 3) / 2;
            let mut t = vec![
                term(c, k),
                term(-c, k - 1),
                term(k_i - 3, k - 2),
                term(-0, k - 3),
            ];
            t.extend((4..=k).map(|h| term(-alt(h), k - h)));
            t
        }
    };
    Ok(terms)
}

/// [`basis2_terms`] converted to `b_0..b_k`.
pub fn basis2_closed_form(case: Basis2Case, k: usize) -> Result<Vec<BigInt>, StabilityError> {
    let mut b = vec![BigInt::zero(); k + 1];
    for t in basis2_terms(case, k)? {
        let h = k - t.lower;
        if h.is_multiple_of(2) {
            b[h] += t.coeff;
        } else {
            b[h] -= t.coeff;
        }
    }
    Ok(b)
}

/// All four closed forms at `k`, in case order.
pub fn basis2_closed_forms(k: usize) -> [Result<Vec<BigInt>, StabilityError>; 4] {
    Basis2Case::ALL.map(|case| basis2_closed_form(case, k))
}

/// `|Γ^r_h|` as predicted by counting: 1 below `r`, `r − 1` on `[r, 2r)`, `r`
/// from `2r` on.
pub fn primary_count(r: usize, h: usize) -> usize {
    if h < r {
        1
    } else if h < 2 * r {
        r - 1
    } else {
        r
    }
}

/// The `r → ∞` limit `a_{λ,h}`, reached once `r > h`.
pub fn stable_limit(lambda: &Partition) -> Vec<BigInt> {
    (0..=lambda.size())
        .map(|h| BigInt::from(a_coeff(lambda, h)))
        .collect()
}
