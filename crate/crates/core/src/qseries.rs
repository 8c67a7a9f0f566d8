//! Truncated power series in q over arbitrary-precision integers, with the
//! q-Pochhammer symbol, Gaussian binomials, and evaluators for the spt and
//! N_S(m, n) generating functions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default truncation order for series checks.
pub const DEFAULT_ORDER: usize = 40;

/// c_0 + c_1 q + … + c_N q^N + O(q^{N+1}).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    coeffs: Vec<BigInt>,
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(BigInt::one(), 0, order)
    }

    /// c·q^power, which is the zero series when `power > order`.
    pub fn monomial(c: BigInt, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = c;
        }
        s
    }

    /// 1/(1 − q^step) = 1 + q^step + q^{2·step} + …
    pub fn geometric(step: usize, order: usize) -> Result<Self> {
        if step == 0 {
            return Err(Error::domain("1/(1 - q^0) has no power series"));
        }
        let mut s = Self::zero(order);
        for i in (0..=order).step_by(step) {
            s.coeffs[i] = BigInt::one();
        }
        Ok(s)
    }

    /// Coefficients beyond `order` are discarded; missing ones are zero.
    pub fn from_coeffs<I, T>(coeffs: I, order: usize) -> Self
    where
        I: IntoIterator<Item = T>,
        T: Into<BigInt>,
    {
        let mut s = Self::zero(order);
        for (slot, c) in s.coeffs.iter_mut().zip(coeffs) {
            *slot = c.into();
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// [q^k], or zero past the truncation order.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::domain(format!(
                "truncation orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.add_same(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.add_same(&other.scale(&BigInt::from(-1))))
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(self.mul_same(other))
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|c| c * k).collect(),
        }
    }

    /// Multiplies by q^power, dropping what falls past the order.
    pub fn shift(&self, power: usize) -> Self {
        let order = self.order();
        let mut s = Self::zero(order);
        for i in power..=order {
            s.coeffs[i] = self.coeffs[i - power].clone();
        }
        s
    }

    /// Multiplicative inverse; the constant term must be ±1.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.abs() != BigInt::one() {
            return Err(Error::domain(format!(
                "constant term {c0} is not a unit over the integers"
            )));
        }
        let order = self.order();
        let mut inv = Self::zero(order);
        inv.coeffs[0] = c0.clone();
        for n in 1..=order {
            let mut acc = BigInt::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc += &self.coeffs[k] * &inv.coeffs[n - k];
                }
            }
            // c0 = ±1, so dividing by c0 is multiplying by it
            inv.coeffs[n] = -(acc * c0);
        }
        Ok(inv)
    }

    fn add_same(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order(), other.order());
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        debug_assert_eq!(self.order(), other.order());
        let order = self.order();
        let mut out = Self::zero(order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] += a * b;
                }
            }
        }
        out
    }

    /// Multiplies in place by (1 − q^e).
    fn mul_one_minus(&mut self, e: usize) {
        if e == 0 {
            self.coeffs.iter_mut().for_each(|c| c.set_zero());
            return;
        }
        for i in (e..=self.order()).rev() {
            let lower = self.coeffs[i - e].clone();
            self.coeffs[i] -= lower;
        }
    }

    /// Divides in place by (1 − q^e), e ≥ 1.
    fn div_one_minus(&mut self, e: usize) {
        debug_assert!(e >= 1);
        for i in e..=self.order() {
            let lower = self.coeffs[i - e].clone();
            self.coeffs[i] += lower;
        }
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}q")?,
                _ => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(q^{})", self.order() + 1)
    }
}

#[derive(Serialize, Deserialize)]
struct SeriesJson {
    order: usize,
    coeffs: Vec<String>,
}

impl Serialize for TruncatedSeries {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        SeriesJson {
            order: self.order(),
            coeffs: self.coeffs.iter().map(ToString::to_string).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TruncatedSeries {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SeriesJson::deserialize(deserializer)?;
        if raw.coeffs.len() != raw.order + 1 {
            return Err(D::Error::custom(format!(
                "order {} needs {} coefficients, got {}",
                raw.order,
                raw.order + 1,
                raw.coeffs.len()
            )));
        }
        let coeffs = raw
            .coeffs
            .iter()
            .map(|c| c.parse::<BigInt>().map_err(D::Error::custom))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(TruncatedSeries { coeffs })
    }
}

/// Number of factors in a q-Pochhammer product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Terms {
    Finite(usize),
    /// All factors; those with exponent above the order are ≡ 1.
    Infinite,
}

/// (q^shift; q)_k = Π_{i<k} (1 − q^{shift+i}).
pub fn pochhammer(terms: Terms, shift: usize, order: usize) -> Result<TruncatedSeries> {
    if shift == 0 {
        return Err(Error::domain("q-Pochhammer shift must be at least 1"));
    }
    let count = match terms {
        Terms::Finite(k) => k,
        Terms::Infinite => (order + 1).saturating_sub(shift),
    };
    let mut s = TruncatedSeries::one(order);
    for i in 0..count {
        let e = shift + i;
        if e > order {
            break;
        }
        s.mul_one_minus(e);
    }
    Ok(s)
}

/// 1 / (q^shift; q)_k, by repeated geometric division.
fn pochhammer_inverse(terms: Terms, shift: usize, order: usize) -> TruncatedSeries {
    debug_assert!(shift >= 1);
    let count = match terms {
        Terms::Finite(k) => k,
        Terms::Infinite => (order + 1).saturating_sub(shift),
    };
    let mut s = TruncatedSeries::one(order);
    for i in 0..count {
        let e = shift + i;
        if e > order {
            break;
        }
        s.div_one_minus(e);
    }
    s
}

pub fn series_inverse(f: &TruncatedSeries) -> Result<TruncatedSeries> {
    f.inverse()
}

/// The Gaussian binomial [top, bottom]_q, a polynomial of degree
/// bottom·(top − bottom), truncated at `order`.
pub fn gaussian_binomial(top: usize, bottom: usize, order: usize) -> Result<TruncatedSeries> {
    if bottom > top {
        return Err(Error::domain(format!(
            "Gaussian binomial needs bottom <= top, got [{top} choose {bottom}]"
        )));
    }
    let k = bottom.min(top - bottom);
    // Π_{i=1}^{k} (1 − q^{top−k+i}) / (1 − q^i)
    let mut s = TruncatedSeries::one(order);
    for i in 1..=k {
        s.mul_one_minus(top - k + i);
        s.div_one_minus(i);
    }
    Ok(s)
}

/// Σ_{n≥1} q^n / ((1 − q^n)² (q^{n+1}; q)_∞).
pub fn gf_spt(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for n in 1..=order {
        let mut term = pochhammer_inverse(Terms::Infinite, n + 1, order);
        term.div_one_minus(n);
        term.div_one_minus(n);
        total = total.add_same(&term.shift(n));
    }
    total
}

/// Σ_{n≥1} q^n (q^{n+1}; q)_∞ / (q^n; q)_∞².
pub fn gf_spt_alt(order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    for n in 1..=order {
        let numerator = pochhammer(Terms::Infinite, n + 1, order).expect("shift >= 1");
        let inv = pochhammer_inverse(Terms::Infinite, n, order);
        let term = numerator.mul_same(&inv).mul_same(&inv);
        total = total.add_same(&term.shift(n));
    }
    total
}

/// Leading exponent and (q;q) denominator length for cell j of crank m, or
/// `None` when the cell is empty (j < |m| for negative m).
fn cell_shape(m: i64, j: usize) -> Option<(usize, usize)> {
    let j = j as i64;
    let (exponent, den) = if m >= 0 {
        (j * j + m * j + 2 * j + m + 1, j + m)
    } else {
        let a = -m;
        if j < a {
            return None;
        }
        (j * j - a * j + 2 * j - a + 1, j - a)
    };
    Some((exponent as usize, den as usize))
}

/// The (j, h) summand of the N_S(m, n) generating function:
/// for m ≥ 0, q^{j²+mj+2j+m+1}/(q;q)_{j+m} · [j, h] q^{h²+h}/((q;q)_h (1 − q^{m+1+j+h})),
/// and for m = −a < 0, q^{j²−aj+2j−a+1}/(q;q)_{j−a} · [j, h] q^{h²+h}/((q;q)_h (1 − q^{j−a+1+h})).
/// Cells with j < a are empty for negative m.
pub fn gf_v_cell(m: i64, j: usize, h: usize, order: usize) -> Result<TruncatedSeries> {
    if h > j {
        return Err(Error::domain(format!(
            "cell needs h <= j, got h = {h}, j = {j}"
        )));
    }
    let Some((exponent, den)) = cell_shape(m, j) else {
        return Ok(TruncatedSeries::zero(order));
    };
    let lead = exponent + h * h + h;
    if lead > order {
        return Ok(TruncatedSeries::zero(order));
    }
    let beta_part = if m >= 0 {
        (m as usize) + 1 + j + h
    } else {
        j + 1 + h - (-m) as usize
    };
    let mut s = gaussian_binomial(j, h, order)?;
    for i in 1..=den {
        s.div_one_minus(i);
    }
    for i in 1..=h {
        s.div_one_minus(i);
    }
    s.div_one_minus(beta_part);
    Ok(s.shift(lead))
}

/// Σ_{n≥1} N_S(m, n) q^n, summed over the (j, h) cells. The j-sum stops once
/// the leading exponent passes the order; it grows with j.
pub fn gf_ns(m: i64, order: usize) -> TruncatedSeries {
    let mut total = TruncatedSeries::zero(order);
    let start = if m >= 0 { 0 } else { (-m) as usize };
    for j in start.. {
        let (exponent, _) = cell_shape(m, j).expect("j >= |m|");
        if exponent > order {
            break;
        }
        for h in 0..=j {
            let cell = gf_v_cell(m, j, h, order).expect("h <= j");
            total = total.add_same(&cell);
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| c.try_into().unwrap()).collect()
    }

    #[test]
    fn arithmetic() {
        let n = 10;
        let one_minus_q = TruncatedSeries::from_coeffs([1, -1], n);
        let all_ones = TruncatedSeries::geometric(1, n).unwrap();
        assert_eq!(one_minus_q.mul(&all_ones).unwrap(), TruncatedSeries::one(n));

        let f = TruncatedSeries::from_coeffs([3, -2, 7, 0, 5], n);
        let minus_f = f.scale(&BigInt::from(-1));
        assert!(f.add(&minus_f).unwrap().is_zero());
        assert!(f.sub(&f).unwrap().is_zero());

        let square = all_ones.mul(&all_ones).unwrap();
        assert_eq!(square.coeff(5), BigInt::from(6));

        let other = TruncatedSeries::one(n + 1);
        assert!(matches!(f.add(&other), Err(Error::Domain(_))));
        assert!(f.mul(&other).is_err());
    }

    #[test]
    fn pochhammer_products() {
        let two = pochhammer(Terms::Finite(2), 1, 6).unwrap();
        assert_eq!(ints(&two), vec![1, -1, -1, 1, 0, 0, 0]);
        assert_eq!(
            pochhammer(Terms::Finite(0), 1, 6).unwrap(),
            TruncatedSeries::one(6)
        );
        assert!(pochhammer(Terms::Finite(2), 0, 6).is_err());

        let euler = pochhammer(Terms::Infinite, 1, 12).unwrap();
        let p = euler.inverse().unwrap();
        assert_eq!(p.coeff(4), BigInt::from(5));
        assert_eq!(ints(&p), vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77]);
    }

    #[test]
    fn inverses() {
        let n = 8;
        let one_minus_q = TruncatedSeries::from_coeffs([1, -1], n);
        assert_eq!(
            one_minus_q.inverse().unwrap(),
            TruncatedSeries::geometric(1, n).unwrap()
        );
        assert_eq!(
            TruncatedSeries::one(n).inverse().unwrap(),
            TruncatedSeries::one(n)
        );
        let negative = TruncatedSeries::from_coeffs([-1, 2, 3], n);
        let inv = negative.inverse().unwrap();
        assert_eq!(negative.mul(&inv).unwrap(), TruncatedSeries::one(n));
        assert!(TruncatedSeries::from_coeffs([2, 1], n).inverse().is_err());
    }

    #[test]
    fn gaussian_binomials() {
        assert_eq!(
            ints(&gaussian_binomial(2, 1, 4).unwrap()),
            vec![1, 1, 0, 0, 0]
        );
        assert_eq!(gaussian_binomial(7, 0, 4).unwrap(), TruncatedSeries::one(4));
        assert_eq!(
            ints(&gaussian_binomial(4, 2, 6).unwrap()),
            vec![1, 1, 2, 1, 1, 0, 0]
        );
        assert!(gaussian_binomial(2, 3, 4).is_err());
    }

    #[test]
    fn spt_series() {
        let s = gf_spt(10);
        assert_eq!(s.coeff(1), BigInt::from(1));
        assert_eq!(s.coeff(4), BigInt::from(10));
        assert_eq!(s.coeff(5), BigInt::from(14));
        let alt = gf_spt_alt(10);
        assert_eq!(alt.coeff(2), BigInt::from(3));
        assert_eq!(alt.coeff(4), BigInt::from(10));
    }

    #[test]
    fn ns_series() {
        assert_eq!(gf_ns(3, 10).coeff(4), BigInt::from(1));
        assert_eq!(gf_ns(0, 10).coeff(4), BigInt::from(2));
        for m in -6i64..=6 {
            let s = gf_ns(m, 12);
            let first = m.unsigned_abs() as usize + 1;
            for k in 0..first {
                assert!(s.coeff(k).is_zero(), "m = {m}, k = {k}");
            }
            assert_eq!(s.coeff(first), BigInt::from(1), "m = {m}");
        }
    }

    #[test]
    fn single_cell() {
        let cell = gf_v_cell(0, 0, 0, 12).unwrap();
        assert!(cell.coeff(0).is_zero());
        for n in 1..=12 {
            assert_eq!(cell.coeff(n), BigInt::from(1));
        }
        assert!(gf_v_cell(1, 1, 2, 12).is_err());
        assert!(gf_v_cell(-3, 2, 0, 12).unwrap().is_zero());
    }

    #[test]
    fn json_uses_string_coefficients() {
        let s = TruncatedSeries::from_coeffs([1, -1], 2);
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"order":2,"coeffs":["1","-1","0"]}"#);
        let back: TruncatedSeries = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        assert!(serde_json::from_str::<TruncatedSeries>(r#"{"order":2,"coeffs":["1"]}"#).is_err());
    }
}
