//! Z4-valued quadratic refinements of Z2 intersection forms and their Brown
//! invariants.
//!
//! A [`Z4Form`] stores the pairing matrix and the values `q(e_i)` on a chosen
//! basis. Every other value follows from the quadratic law
//! `q(x + y) = q(x) + q(y) + 2 (x . y)`. The Brown invariant is read off the
//! argument of the Gauss sum `S = sum_x i^q(x)`, which is computed exactly in
//! `Z[i]`.

use std::fmt;
use std::ops::{Add, Neg};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest dimension accepted; the Gauss sum is evaluated by enumerating
/// all `2^dim` vectors.
pub const MAX_DIM: usize = 30;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ZFormError {
    #[error("pairing must be a {dim}x{dim} matrix")]
    PairingShape { dim: usize },
    #[error("value vector has length {got}, expected {dim}")]
    ValuesShape { dim: usize, got: usize },
    #[error("pairing entry ({row},{col}) = {value} is not 0 or 1")]
    PairingEntry { row: usize, col: usize, value: u8 },
    #[error("pairing is not symmetric at ({row},{col})")]
    Asymmetric { row: usize, col: usize },
    #[error("value q(e_{index}) = {value} is not in 0..=3")]
    ValueRange { index: usize, value: u8 },
    #[error("q(e_{index}) = {value} has parity different from e_{index}.e_{index}")]
    Parity { index: usize, value: u8 },
    #[error("dimension {dim} exceeds the supported maximum {MAX_DIM}")]
    TooLarge { dim: usize },
    #[error("vector has length {got}, expected {dim}")]
    LengthMismatch { dim: usize, got: usize },
    #[error("vector entry {value} is not 0 or 1")]
    VectorEntry { value: u8 },
    #[error("spanning vectors are linearly dependent over Z2")]
    Dependent,
    #[error("unknown Klein bottle variant ({disorienting},{two_sided})")]
    KleinVariant { disorienting: u8, two_sided: u8 },
}

/// An element of Z/4.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Z4(u8);

impl Z4 {
    pub const ZERO: Z4 = Z4(0);

    pub fn new(v: i64) -> Self {
        Z4(v.rem_euclid(4) as u8)
    }

    pub fn value(self) -> u8 {
        self.0
    }

    pub fn is_even(self) -> bool {
        self.0.is_multiple_of(2)
    }
}

impl Add for Z4 {
    type Output = Z4;
    fn add(self, rhs: Z4) -> Z4 {
        Z4((self.0 + rhs.0) % 4)
    }
}

impl Neg for Z4 {
    type Output = Z4;
    fn neg(self) -> Z4 {
        Z4((4 - self.0) % 4)
    }
}

impl fmt::Display for Z4 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Brown invariant of a form: a residue mod 8, or the marker used when the
/// Gauss sum vanishes (a radical vector with nonzero value).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BrownValue {
    Value(u8),
    NonInformative,
}

impl BrownValue {
    pub fn new(v: i64) -> Self {
        BrownValue::Value(v.rem_euclid(8) as u8)
    }

    pub fn value(self) -> Option<u8> {
        match self {
            BrownValue::Value(v) => Some(v),
            BrownValue::NonInformative => None,
        }
    }

    pub fn is_informative(self) -> bool {
        matches!(self, BrownValue::Value(_))
    }
}

impl fmt::Display for BrownValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrownValue::Value(v) => write!(f, "{v}"),
            BrownValue::NonInformative => f.write_str("non-informative"),
        }
    }
}

impl Serialize for BrownValue {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            BrownValue::Value(v) => s.serialize_u8(*v),
            BrownValue::NonInformative => s.serialize_str("non-informative"),
        }
    }
}

impl<'de> Deserialize<'de> for BrownValue {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(i64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(v) => Ok(BrownValue::new(v)),
            Raw::Text(t) if t == "non-informative" => Ok(BrownValue::NonInformative),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad Brown value {t:?}"))),
        }
    }
}

/// Exact Gauss sum `re + i*im` of a form.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GaussSum {
    pub re: i64,
    pub im: i64,
}

impl GaussSum {
    pub fn norm_sq(self) -> i128 {
        (self.re as i128).pow(2) + (self.im as i128).pow(2)
    }

    /// Argument in units of `pi/4`. Gauss sums of Z4 forms always lie on one
    /// of the eight rays `|S| e^{2 pi i k / 8}`.
    pub fn octant(self) -> Option<u8> {
        let GaussSum { re, im } = self;
        match (re.signum(), im.signum()) {
            (0, 0) => None,
            (1, 0) => Some(0),
            (1, 1) if re == im => Some(1),
            (0, 1) => Some(2),
            (-1, 1) if re == -im => Some(3),
            (-1, 0) => Some(4),
            (-1, -1) if re == im => Some(5),
            (0, -1) => Some(6),
            (1, -1) if re == -im => Some(7),
            _ => panic!("Gauss sum {re}+{im}i does not lie on an eighth-root ray"),
        }
    }
}

/// A Z4 quadratic refinement of a symmetric Z2 bilinear form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Z4Form {
    dim: usize,
    /// Row `i` as a bitmask over columns.
    rows: Vec<u64>,
    values: Vec<Z4>,
}

#[derive(Serialize, Deserialize)]
struct FormRepr {
    dim: usize,
    pairing: Vec<Vec<u8>>,
    values: Vec<u8>,
}

impl Serialize for Z4Form {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        FormRepr { dim: self.dim, pairing: self.pairing(), values: self.values.iter().map(|v| v.0).collect() }
            .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Z4Form {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = FormRepr::deserialize(d)?;
        if raw.pairing.len() != raw.dim {
            return Err(serde::de::Error::custom(ZFormError::PairingShape { dim: raw.dim }));
        }
        Z4Form::new(raw.pairing, raw.values).map_err(serde::de::Error::custom)
    }
}

impl Z4Form {
    /// Builds a form from a pairing matrix and basis values, checking symmetry
    /// and the parity law `q(e_i) = e_i . e_i (mod 2)`.
    pub fn new(pairing: Vec<Vec<u8>>, values: Vec<u8>) -> Result<Self, ZFormError> {
        let dim = pairing.len();
        if dim > MAX_DIM {
            return Err(ZFormError::TooLarge { dim });
        }
        if values.len() != dim {
            return Err(ZFormError::ValuesShape { dim, got: values.len() });
        }
        let mut rows = vec![0u64; dim];
        for (i, row) in pairing.iter().enumerate() {
            if row.len() != dim {
                return Err(ZFormError::PairingShape { dim });
            }
            for (j, &e) in row.iter().enumerate() {
                match e {
                    0 => {}
                    1 => rows[i] |= 1 << j,
                    value => return Err(ZFormError::PairingEntry { row: i, col: j, value }),
                }
            }
        }
        for i in 0..dim {
            for j in 0..i {
                if (rows[i] >> j) & 1 != (rows[j] >> i) & 1 {
                    return Err(ZFormError::Asymmetric { row: i, col: j });
                }
            }
        }
        let mut vals = Vec::with_capacity(dim);
        for (i, &v) in values.iter().enumerate() {
            if v > 3 {
                return Err(ZFormError::ValueRange { index: i, value: v });
            }
            if u64::from(v % 2) != (rows[i] >> i) & 1 {
                return Err(ZFormError::Parity { index: i, value: v });
            }
            vals.push(Z4(v));
        }
        Ok(Z4Form { dim, rows, values: vals })
    }

    pub fn empty() -> Self {
        Z4Form { dim: 0, rows: Vec::new(), values: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pairing(&self) -> Vec<Vec<u8>> {
        self.rows.iter().map(|r| (0..self.dim).map(|j| ((r >> j) & 1) as u8).collect()).collect()
    }

    pub fn values(&self) -> &[Z4] {
        &self.values
    }

    /// `x . y` for bitmask vectors.
    fn dot(&self, x: u64, y: u64) -> u8 {
        let mut acc = 0u32;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            acc += (self.rows[i] & y).count_ones();
            bits &= bits - 1;
        }
        (acc % 2) as u8
    }

    fn eval_mask(&self, x: u64) -> Z4 {
        // q(a + e_i) = q(a) + q(e_i) + 2 (a . e_i), adding basis vectors one at a time
        let mut acc = Z4::ZERO;
        let mut partial = 0u64;
        let mut bits = x;
        while bits != 0 {
            let i = bits.trailing_zeros() as usize;
            let cross = (self.rows[i] & partial).count_ones() % 2;
            acc = acc + self.values[i] + Z4::new(2 * i64::from(cross));
            partial |= 1 << i;
            bits &= bits - 1;
        }
        acc
    }

    fn to_mask(&self, x: &[u8]) -> Result<u64, ZFormError> {
        if x.len() != self.dim {
            return Err(ZFormError::LengthMismatch { dim: self.dim, got: x.len() });
        }
        let mut mask = 0u64;
        for (i, &b) in x.iter().enumerate() {
            match b {
                0 => {}
                1 => mask |= 1 << i,
                value => return Err(ZFormError::VectorEntry { value }),
            }
        }
        Ok(mask)
    }

    /// `q(x)` for a Z2 vector given by its coordinates in the stored basis.
    pub fn evaluate(&self, x: &[u8]) -> Result<Z4, ZFormError> {
        Ok(self.eval_mask(self.to_mask(x)?))
    }

    /// Intersection number `x . y` in Z2.
    pub fn pair(&self, x: &[u8], y: &[u8]) -> Result<u8, ZFormError> {
        Ok(self.dot(self.to_mask(x)?, self.to_mask(y)?))
    }

    /// Exact Gauss sum, walking the vectors in Gray-code order.
    pub fn gauss_sum(&self) -> GaussSum {
        let mut counts = [0i64; 4];
        let mut x = 0u64;
        let mut q = Z4::ZERO;
        counts[0] += 1;
        let total: u64 = 1 << self.dim;
        for step in 1..total {
            let i = step.trailing_zeros() as usize;
            let cross = (self.rows[i] & x).count_ones() % 2;
            // toggling e_i: q(x + e_i) = q(x) + q(e_i) + 2 (x . e_i); the same
            // rule removes e_i because 2 q(e_i) + 2 (e_i . e_i) = 0 in Z4
            q = q + self.values[i] + Z4::new(2 * i64::from(cross));
            x ^= 1 << i;
            counts[q.0 as usize] += 1;
        }
        GaussSum { re: counts[0] - counts[2], im: counts[1] - counts[3] }
    }

    pub fn brown_invariant(&self) -> BrownValue {
        match self.gauss_sum().octant() {
            Some(k) => BrownValue::Value(k),
            None => BrownValue::NonInformative,
        }
    }

    /// Orthogonal direct sum: block-diagonal pairing, concatenated values.
    pub fn direct_sum(&self, other: &Z4Form) -> Result<Z4Form, ZFormError> {
        let dim = self.dim + other.dim;
        if dim > MAX_DIM {
            return Err(ZFormError::TooLarge { dim });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().map(|r| r << self.dim));
        let mut values = self.values.clone();
        values.extend_from_slice(&other.values);
        Ok(Z4Form { dim, rows, values })
    }

    /// The form induced on the span of `basis`.
    pub fn restrict(&self, basis: &[Vec<u8>]) -> Result<Z4Form, ZFormError> {
        let masks = basis.iter().map(|b| self.to_mask(b)).collect::<Result<Vec<_>, _>>()?;
        if gf2_rank(&masks) != masks.len() {
            return Err(ZFormError::Dependent);
        }
        let k = masks.len();
        let mut rows = vec![0u64; k];
        for i in 0..k {
            for j in 0..k {
                if self.dot(masks[i], masks[j]) == 1 {
                    rows[i] |= 1 << j;
                }
            }
        }
        let values = masks.iter().map(|&m| self.eval_mask(m)).collect();
        Ok(Z4Form { dim: k, rows, values })
    }

    /// True iff every value of `q` is 0 or 2. Since `q(x)` is congruent mod 2
    /// to the sum of the basis values in `x`, this reduces to the basis.
    pub fn is_even(&self) -> bool {
        self.values.iter().all(|v| v.is_even())
    }

    pub fn pairing_rank(&self) -> usize {
        gf2_rank(&self.rows)
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.pairing_rank() == self.dim
    }
}

/// Rank over Z2 of a list of bitmask vectors.
pub fn gf2_rank(vectors: &[u64]) -> usize {
    let mut basis: Vec<u64> = Vec::new();
    for &v in vectors {
        let mut v = v;
        for &b in &basis {
            v = v.min(v ^ b);
        }
        if v != 0 {
            basis.push(v);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis.len()
}

/// Summand of a Guillou-Marin form coming from a Klein bottle, written in the
/// basis `(a, c)` with `a` a disorienting loop and `c` the two-sided loop
/// meeting it once: pairing `[[1,1],[1,0]]`, values `[q(a), q(c)]`.
pub fn klein_bottle_form(disorienting: u8, two_sided: u8) -> Result<Z4Form, ZFormError> {
    if disorienting % 2 != 1 || disorienting > 3 || !two_sided.is_multiple_of(2) || two_sided > 3 {
        return Err(ZFormError::KleinVariant { disorienting, two_sided });
    }
    Z4Form::new(vec![vec![1, 1], vec![1, 0]], vec![disorienting, two_sided])
}
