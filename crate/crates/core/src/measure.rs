//! Probability weights over the ground set.
//!
//! Everything measure-related is generic over [`Scalar`]. The exact
//! [`Rational`](crate::Rational) instantiation is the one every threshold
//! comparison in the crate is designed for; `f64` works but strict and
//! non-strict comparisons then inherit rounding.

use std::fmt::{Debug, Display};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::set::PointSet;

/// Ordered field used for weights, thresholds and measures.
pub trait Scalar:
    Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
    fn from_count(n: usize) -> Self {
        Self::from_usize(n).expect("count representable in scalar")
    }

    /// Least integer `k >= self` (for non-negative values).
    fn ceil_count(&self) -> usize {
        let mut k = self.to_f64().map_or(0, |f| f.floor().max(0.0) as usize);
        while Self::from_count(k) < *self {
            k += 1;
        }
        while k > 0 && Self::from_count(k - 1) >= *self {
            k -= 1;
        }
        k
    }
}

impl<T> Scalar for T where
    T: Num + Clone + PartialOrd + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync
{
}

/// Parse an exact fraction written as `p/q`. Decimal notation is rejected.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::BadRational(s.to_string());
    let (p, q) = s.trim().split_once('/').ok_or_else(bad)?;
    let p = BigInt::from_str(p.trim()).map_err(|_| bad())?;
    let q = BigInt::from_str(q.trim()).map_err(|_| bad())?;
    if q.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(p, q))
}

/// Probability distribution on a finite ground set, one weight per point.
#[derive(Clone, Debug, PartialEq)]
pub struct Distribution<T = BigRational> {
    weights: Vec<T>,
}

impl<T: Scalar> Distribution<T> {
    /// Weights must be non-negative and sum to exactly one.
    pub fn new(weights: Vec<T>) -> Result<Self> {
        if let Some(i) = weights.iter().position(|w| *w < T::zero()) {
            return Err(Error::NegativeWeight(i));
        }
        let total = weights.iter().fold(T::zero(), |acc, w| acc + w.clone());
        if total != T::one() {
            return Err(Error::NotNormalized(total.to_string()));
        }
        Ok(Distribution { weights })
    }

    /// Scales arbitrary non-negative weights to sum to one.
    pub fn normalized(weights: Vec<T>) -> Result<Self> {
        if let Some(i) = weights.iter().position(|w| *w < T::zero()) {
            return Err(Error::NegativeWeight(i));
        }
        let total = weights.iter().fold(T::zero(), |acc, w| acc + w.clone());
        if total.is_zero() {
            return Err(Error::NotNormalized(total.to_string()));
        }
        Ok(Distribution {
            weights: weights.into_iter().map(|w| w / total.clone()).collect(),
        })
    }

    pub fn uniform(n: usize) -> Self {
        Self::uniform_on(n, PointSet::full(n))
    }

    /// Uniform on `support`, zero elsewhere.
    pub fn uniform_on(n: usize, support: PointSet) -> Self {
        assert!(
            !support.is_empty(),
            "uniform distribution needs a non-empty support"
        );
        let share = T::one() / T::from_count(support.len());
        let weights = (0..n)
            .map(|i| {
                if support.contains(i) {
                    share.clone()
                } else {
                    T::zero()
                }
            })
            .collect();
        Distribution { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn weights(&self) -> &[T] {
        &self.weights
    }

    pub fn weight(&self, i: usize) -> &T {
        &self.weights[i]
    }

    /// Points of positive weight.
    pub fn support(&self) -> PointSet {
        self.weights
            .iter()
            .enumerate()
            .filter(|(_, w)| **w > T::zero())
            .map(|(i, _)| i)
            .collect()
    }

    /// `mu(s)`, the total weight of `s`.
    pub fn measure(&self, s: PointSet) -> T {
        s.iter()
            .filter(|&i| i < self.weights.len())
            .fold(T::zero(), |acc, i| acc + self.weights[i].clone())
    }

    /// `mu` conditioned on `a`.
    pub fn conditional(&self, a: PointSet) -> Result<Self> {
        let mass = self.measure(a);
        if mass.is_zero() {
            return Err(Error::ZeroMassCondition(a));
        }
        let weights = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| {
                if a.contains(i) {
                    w.clone() / mass.clone()
                } else {
                    T::zero()
                }
            })
            .collect();
        Ok(Distribution { weights })
    }

    /// Measure oracle for repeated queries. Supports of at most
    /// [`MeasureTable::MAX_TABULATED`] points get a table of all subset sums.
    pub fn table(&self) -> MeasureTable<'_, T> {
        let support = self.support();
        let table = (support.len() <= MeasureTable::<T>::MAX_TABULATED).then(|| {
            let points = support.to_vec();
            let mut sums = Vec::with_capacity(1 << points.len());
            sums.push(T::zero());
            for mask in 1usize..1 << points.len() {
                let low = mask.trailing_zeros() as usize;
                let rest = sums[mask & (mask - 1)].clone();
                sums.push(rest + self.weights[points[low]].clone());
            }
            sums
        });
        MeasureTable {
            mu: self,
            support,
            table,
        }
    }
}

/// See [`Distribution::table`].
pub struct MeasureTable<'a, T> {
    mu: &'a Distribution<T>,
    support: PointSet,
    table: Option<Vec<T>>,
}

impl<T: Scalar> MeasureTable<'_, T> {
    pub const MAX_TABULATED: usize = 14;

    pub fn measure(&self, s: PointSet) -> T {
        match &self.table {
            Some(t) => t[s.compress(self.support).bits() as usize].clone(),
            None => self.mu.measure(s),
        }
    }
}

impl Distribution<BigRational> {
    /// Parse `p/q` weight strings.
    pub fn from_strs<S: AsRef<str>>(weights: &[S]) -> Result<Self> {
        let parsed = weights
            .iter()
            .map(|w| parse_rational(w.as_ref()))
            .collect::<Result<Vec<_>>>()?;
        Distribution::new(parsed)
    }

    pub fn to_strs(&self) -> Vec<String> {
        self.weights
            .iter()
            .map(|w| format!("{}/{}", w.numer(), w.denom()))
            .collect()
    }
}
