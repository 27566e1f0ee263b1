//! Integer polynomials in one variable, q-numbers and q-number factorization.
//!
//! The same type carries counting polynomials in `q` (`P_w`, `R_w`, `R_G`)
//! and signed chromatic polynomials in `t`; only the display variable differs.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::de::{self, SeqAccess, Visitor};
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Polynomial with arbitrary-precision integer coefficients, lowest degree
/// first. No trailing zeros are stored; the zero polynomial is empty.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QPolynomial {
    coeffs: Vec<BigInt>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c)])
    }

    /// `c_0 + c_1 x`.
    pub fn linear(c0: i64, c1: i64) -> Self {
        Self::from_coeffs(vec![BigInt::from(c0), BigInt::from(c1)])
    }

    /// `x^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        Self { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Tally vector `counts[k]` = number of objects of statistic `k`.
    pub fn from_counts(counts: &[u64]) -> Self {
        Self::from_coeffs(counts.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `[a]_q = 1 + q + ... + q^{a-1}`.
    pub fn q_number(a: i64) -> Result<Self> {
        if a < 1 {
            return Err(Error::InvalidQNumber(a));
        }
        Ok(Self::q_number_unchecked(a as usize))
    }

    fn q_number_unchecked(a: usize) -> Self {
        Self {
            coeffs: vec![BigInt::one(); a],
        }
    }

    /// Product of q-numbers `[a_1]_q [a_2]_q ...`; every `a_k >= 1`.
    pub fn q_number_product(factors: impl IntoIterator<Item = u32>) -> Self {
        factors.into_iter().fold(Self::one(), |acc, a| {
            assert!(a >= 1, "q-number argument must be positive");
            &acc * &Self::q_number_unchecked(a as usize)
        })
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_i64(&self, x: i64) -> BigInt {
        self.eval(&BigInt::from(x))
    }

    /// Coefficients as `i64`, when they all fit.
    pub fn to_i64s(&self) -> Option<Vec<i64>> {
        self.coeffs.iter().map(ToPrimitive::to_i64).collect()
    }

    pub fn has_nonnegative_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// `a_i = a_{d-i}` for all `i`.
    pub fn is_palindromic(&self) -> Result<bool> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(self.coeffs.iter().eq(self.coeffs.iter().rev()))
    }

    /// Exact quotient by a polynomial with leading coefficient 1, or `None`
    /// when the remainder is nonzero.
    pub fn div_exact_monic(&self, divisor: &QPolynomial) -> Option<QPolynomial> {
        let dd = divisor.degree()?;
        assert!(divisor.coeffs[dd].is_one(), "divisor must be monic");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let nd = self.degree().unwrap();
        if nd < dd {
            return None;
        }
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = std::mem::take(&mut rem[k + dd]);
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs[..dd].iter().enumerate() {
                rem[k + j] -= &c * d;
            }
            quot[k] = c;
        }
        rem.iter()
            .all(Zero::is_zero)
            .then(|| Self::from_coeffs(quot))
    }

    fn check_factorizable_input(&self) -> Result<()> {
        let c0 = self.coeff(0);
        if !c0.is_one() {
            return Err(Error::ConstantTermNotOne(c0.to_string()));
        }
        Ok(())
    }

    /// Multiset `{a_k >= 2}` (sorted ascending) with `self = prod [a_k]_q`, if
    /// one exists. Errors unless the constant term is 1.
    pub fn factor_into_q_numbers(&self) -> Result<Option<Vec<u32>>> {
        self.check_factorizable_input()?;
        let mut acc = Vec::new();
        let mut found = None;
        search_q_factors(self, u32::MAX, &mut acc, &mut |f| {
            found = Some(f.to_vec());
            true
        });
        Ok(found.map(|mut f| {
            f.sort_unstable();
            f
        }))
    }

    /// Every distinct multiset `{a_k >= 2}` with `self = prod [a_k]_q`.
    pub fn q_number_factorizations(&self) -> Result<Vec<Vec<u32>>> {
        self.check_factorizable_input()?;
        let mut acc = Vec::new();
        let mut all = Vec::new();
        search_q_factors(self, u32::MAX, &mut acc, &mut |f| {
            let mut f = f.to_vec();
            f.sort_unstable();
            all.push(f);
            false
        });
        all.sort();
        all.dedup();
        Ok(all)
    }

    /// Display wrapper using `var` as the indeterminate.
    pub fn display_in(&self, var: char) -> PolyDisplay<'_> {
        PolyDisplay { poly: self, var }
    }
}

/// Depth-first search over non-increasing factor sequences; `visit` returns
/// `true` to stop. Returns whether the search was stopped.
fn search_q_factors(
    p: &QPolynomial,
    max_factor: u32,
    acc: &mut Vec<u32>,
    visit: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    let Some(deg) = p.degree() else {
        return false;
    };
    if deg == 0 {
        return p.coeffs[0].is_one() && visit(acc);
    }
    // every product of q-numbers is palindromic with unit ends
    if !p.coeffs[deg].is_one() || !p.coeffs.iter().eq(p.coeffs.iter().rev()) {
        return false;
    }
    let top = max_factor.min(deg as u32 + 1);
    for a in (2..=top).rev() {
        let qa = QPolynomial::q_number_unchecked(a as usize);
        if let Some(quot) = p.div_exact_monic(&qa) {
            acc.push(a);
            let stop = search_q_factors(&quot, a, acc, visit);
            acc.pop();
            if stop {
                return true;
            }
        }
    }
    false
}

impl Add for &QPolynomial {
    type Output = QPolynomial;

    fn add(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Sub for &QPolynomial {
    type Output = QPolynomial;

    fn sub(self, rhs: &QPolynomial) -> QPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect();
        QPolynomial::from_coeffs(coeffs)
    }
}

impl Mul for &QPolynomial {
    type Output = QPolynomial;

    fn mul(self, rhs: &QPolynomial) -> QPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return QPolynomial::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPolynomial::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for QPolynomial {
            type Output = QPolynomial;
            fn $m(self, rhs: QPolynomial) -> QPolynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

pub struct PolyDisplay<'a> {
    poly: &'a QPolynomial,
    var: char,
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.poly.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            let var = self.var;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{var}")?,
                (1, false) => write!(f, "{mag}*{var}")?,
                (_, true) => write!(f, "{var}^{k}")?,
                (_, false) => write!(f, "{mag}*{var}^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.display_in('q').fmt(f)
    }
}

impl fmt::Debug for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QPolynomial({self})")
    }
}

// JSON form: coefficient array, lowest degree first. Coefficients outside the
// i64 range are written as decimal strings.
impl Serialize for QPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for QPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }

        struct CoeffsVisitor;

        impl<'de> Visitor<'de> for CoeffsVisitor {
            type Value = QPolynomial;

            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                f.write_str("an array of integer coefficients")
            }

            fn visit_seq<A: SeqAccess<'de>>(
                self,
                mut seq: A,
            ) -> std::result::Result<QPolynomial, A::Error> {
                let mut coeffs = Vec::new();
                while let Some(c) = seq.next_element::<Coeff>()? {
                    coeffs.push(match c {
                        Coeff::Int(v) => BigInt::from(v),
                        Coeff::Text(t) => t.parse().map_err(de::Error::custom)?,
                    });
                }
                Ok(QPolynomial::from_coeffs(coeffs))
            }
        }

        d.deserialize_seq(CoeffsVisitor)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a: i64) -> QPolynomial {
        QPolynomial::q_number(a).unwrap()
    }

    #[test]
    fn q_numbers() {
        assert_eq!(q(1), QPolynomial::one());
        assert_eq!(q(4), QPolynomial::from_i64s(&[1, 1, 1, 1]));
        for a in 1..10 {
            assert_eq!(q(a).eval_i64(1), BigInt::from(a));
        }
        assert_eq!(QPolynomial::q_number(0), Err(Error::InvalidQNumber(0)));
        assert!(QPolynomial::q_number(-3).is_err());
    }

    #[test]
    fn ring_operations() {
        let p = QPolynomial::from_i64s(&[3, 0, -2, 5]);
        assert_eq!(&p * &QPolynomial::one(), p);
        assert_eq!(&p + &QPolynomial::zero(), p);
        assert_eq!(&p - &p, QPolynomial::zero());
        // (1+q)(1+q+q^2) expanded by hand
        assert_eq!(&q(2) * &q(3), QPolynomial::from_i64s(&[1, 2, 2, 1]));
        let example = QPolynomial::q_number_product([4, 2, 3, 4, 1, 2, 3]);
        assert_eq!(example.degree(), Some(3 + 1 + 2 + 3 + 1 + 2));
        assert_eq!(example.eval_i64(1), BigInt::from(4 * 2 * 3 * 4 * 2 * 3));
        assert!((&p * &QPolynomial::zero()).is_zero());
    }

    #[test]
    fn palindromes() {
        assert!(QPolynomial::from_i64s(&[1, 1]).is_palindromic().unwrap());
        assert!(QPolynomial::from_i64s(&[1, 2, 1]).is_palindromic().unwrap());
        assert!(!QPolynomial::from_i64s(&[1, 2, 2, 2]).is_palindromic().unwrap());
        assert_eq!(QPolynomial::zero().is_palindromic(), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn exact_division() {
        let p = QPolynomial::from_i64s(&[1, 2, 2, 1]);
        assert_eq!(p.div_exact_monic(&q(3)), Some(q(2)));
        assert_eq!(p.div_exact_monic(&q(4)), None);
        assert_eq!(q(5).div_exact_monic(&q(2)), None);
    }

    #[test]
    fn factorization_examples() {
        assert_eq!(QPolynomial::one().factor_into_q_numbers().unwrap(), Some(vec![]));
        assert_eq!(
            QPolynomial::from_i64s(&[1, 2, 2, 1]).factor_into_q_numbers().unwrap(),
            Some(vec![2, 3])
        );
        assert_eq!(q(5).factor_into_q_numbers().unwrap(), Some(vec![5]));
        assert_eq!(
            QPolynomial::from_i64s(&[1, 2, 2, 2]).factor_into_q_numbers().unwrap(),
            None
        );
        assert!(matches!(
            QPolynomial::from_i64s(&[2, 1]).factor_into_q_numbers(),
            Err(Error::ConstantTermNotOne(_))
        ));
        assert!(QPolynomial::zero().factor_into_q_numbers().is_err());
    }

    /// Multisets of integers >= 2 with sum of (a - 1) at most `budget`.
    fn multisets(budget: u32, max: u32, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        out.push(acc.clone());
        for a in (2..=max.min(budget + 1)).rev() {
            acc.push(a);
            multisets(budget - (a - 1), a, acc, out);
            acc.pop();
        }
    }

    #[test]
    fn factorization_round_trip_is_exhaustively_unique() {
        let mut family = Vec::new();
        multisets(12, 13, &mut Vec::new(), &mut family);
        assert!(family.len() > 100);
        for m in &family {
            let p = QPolynomial::q_number_product(m.iter().copied());
            let mut expected = m.clone();
            expected.sort_unstable();
            assert!(p.is_palindromic().unwrap());
            assert_eq!(p.factor_into_q_numbers().unwrap(), Some(expected.clone()));
            assert_eq!(p.q_number_factorizations().unwrap(), vec![expected]);
        }
    }

    #[test]
    fn text_forms() {
        assert_eq!(QPolynomial::from_i64s(&[1, 2, 2, 1]).to_string(), "1 + 2*q + 2*q^2 + q^3");
        assert_eq!(QPolynomial::one().to_string(), "1");
        assert_eq!(QPolynomial::zero().to_string(), "0");
        let chi = QPolynomial::from_i64s(&[0, 2, -3, 1]);
        assert_eq!(chi.display_in('t').to_string(), "2*t - 3*t^2 + t^3");
        assert_eq!(QPolynomial::from_i64s(&[-1, 1]).display_in('t').to_string(), "-1 + t");
    }

    #[test]
    fn json_form() {
        let p = QPolynomial::from_i64s(&[1, 2, 2, 1]);
        assert_eq!(serde_json::to_string(&p).unwrap(), "[1,2,2,1]");
        let huge = QPolynomial::from_coeffs(vec![BigInt::one(), BigInt::from(u64::MAX) * 3]);
        let text = serde_json::to_string(&huge).unwrap();
        assert_eq!(serde_json::from_str::<QPolynomial>(&text).unwrap(), huge);
    }

    proptest! {
        #[test]
        fn q_number_products_multiply_at_one(a in 1i64..40, b in 1i64..40) {
            prop_assert_eq!((&q(a) * &q(b)).eval_i64(1), BigInt::from(a * b));
        }

        #[test]
        fn multiplication_adds_degrees(
            x in proptest::collection::vec(-5i64..5, 1..8),
            y in proptest::collection::vec(-5i64..5, 1..8),
        ) {
            let p = QPolynomial::from_i64s(&x);
            let r = QPolynomial::from_i64s(&y);
            if let (Some(dp), Some(dr)) = (p.degree(), r.degree()) {
                prop_assert_eq!((&p * &r).degree(), Some(dp + dr));
            }
        }
    }
}
