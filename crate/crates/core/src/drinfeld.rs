//! Drinfeld polynomial tuples, their factorization into `π_{λ,a}` pieces,
//! and spectral characters `χ: ℂ^× → Γ`.
//!
//! Points of `ℂ^×` are either exact nonzero rationals or opaque symbols; the
//! theory only ever compares points for equality, so nothing is lost.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::gamma::{GammaElement, GammaGroup};
use crate::rootsys::{LieType, RootSystem, RootSystemError, Weight};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DrinfeldError {
    #[error("spectral points must be nonzero")]
    ZeroPoint,
    #[error("polynomial {index} does not have constant term 1")]
    ConstantTerm { index: usize },
    #[error("polynomial {index} has roots that are not rational; supply the tuple in factored form")]
    IrrationalRoots { index: usize },
    #[error("expected {expected} polynomials, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("weight {0} attached to a spectral point is not dominant")]
    NotDominant(Weight),
    #[error("tuple of type {found} where {expected} was expected")]
    TypeMismatch { expected: LieType, found: LieType },
    #[error("symbolic point {0} cannot be expanded into coefficients")]
    Symbolic(String),
    #[error("number too large for this operation: {0}")]
    Overflow(String),
    #[error(transparent)]
    Weight(#[from] RootSystemError),
    #[error("malformed tuple JSON: {0}")]
    Json(String),
}

/// A point of `ℂ^×`: an exact nonzero rational, or an opaque label.
///
/// Ordering puts rationals first (ascending), then labels lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SpectralPoint {
    Rational(BigRational),
    Symbolic(String),
}

impl SpectralPoint {
    pub fn rational(value: BigRational) -> Result<Self, DrinfeldError> {
        if value.is_zero() {
            return Err(DrinfeldError::ZeroPoint);
        }
        Ok(SpectralPoint::Rational(value))
    }

    pub fn ratio(num: i64, den: i64) -> Result<Self, DrinfeldError> {
        if den == 0 {
            return Err(DrinfeldError::Json("zero denominator".into()));
        }
        Self::rational(BigRational::new(num.into(), den.into()))
    }

    pub fn symbolic(label: impl Into<String>) -> Self {
        SpectralPoint::Symbolic(label.into())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            SpectralPoint::Rational(q) => Some(q),
            SpectralPoint::Symbolic(_) => None,
        }
    }
}

impl fmt::Display for SpectralPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpectralPoint::Rational(q) => write!(f, "{q}"),
            SpectralPoint::Symbolic(s) => write!(f, "{s}"),
        }
    }
}

#[derive(Serialize, Deserialize)]
enum PointRepr {
    #[serde(rename = "rat")]
    Rat(i64, i64),
    #[serde(rename = "sym")]
    Sym(String),
}

impl Serialize for SpectralPoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let repr = match self {
            SpectralPoint::Rational(q) => {
                let (n, d) = (q.numer().to_i64(), q.denom().to_i64());
                match (n, d) {
                    (Some(n), Some(d)) => PointRepr::Rat(n, d),
                    _ => return Err(serde::ser::Error::custom("rational point exceeds 64-bit range")),
                }
            }
            SpectralPoint::Symbolic(l) => PointRepr::Sym(l.clone()),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SpectralPoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match PointRepr::deserialize(d)? {
            PointRepr::Rat(n, den) => SpectralPoint::ratio(n, den).map_err(serde::de::Error::custom),
            PointRepr::Sym(l) => Ok(SpectralPoint::Symbolic(l)),
        }
    }
}

/// An element of the monoid of Drinfeld tuples, stored in its unique
/// factorization `π = Π_j π_{λ_j, a_j}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyTuple {
    lie_type: LieType,
    factors: BTreeMap<SpectralPoint, Weight>,
}

impl PolyTuple {
    /// The identity tuple `(1, …, 1)`.
    pub fn one(lie_type: LieType) -> Self {
        PolyTuple { lie_type, factors: BTreeMap::new() }
    }

    /// `π_{λ,a}`.
    pub fn fundamental_piece(rs: &RootSystem, point: SpectralPoint, lambda: Weight) -> Result<Self, DrinfeldError> {
        Self::from_factors(rs, [(point, lambda)])
    }

    /// Build from `(a_j, λ_j)` pairs; repeated points are merged (their
    /// weights add), zero weights are dropped.
    pub fn from_factors(
        rs: &RootSystem,
        pairs: impl IntoIterator<Item = (SpectralPoint, Weight)>,
    ) -> Result<Self, DrinfeldError> {
        let mut out = PolyTuple::one(rs.lie_type());
        for (point, w) in pairs {
            rs.check_weight(&w)?;
            if !w.is_dominant() {
                return Err(DrinfeldError::NotDominant(w));
            }
            out.absorb(point, &w);
        }
        Ok(out)
    }

    fn absorb(&mut self, point: SpectralPoint, w: &Weight) {
        if w.is_zero() {
            return;
        }
        let entry = self.factors.entry(point).or_insert_with(|| Weight::zero(w.rank()));
        *entry = entry.add(w);
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn factors(&self) -> &BTreeMap<SpectralPoint, Weight> {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    fn same_type(&self, other: &PolyTuple) -> Result<(), DrinfeldError> {
        if self.lie_type != other.lie_type {
            return Err(DrinfeldError::TypeMismatch { expected: self.lie_type, found: other.lie_type });
        }
        Ok(())
    }

    /// Coordinatewise product of polynomial tuples.
    pub fn multiply(&self, other: &PolyTuple) -> Result<PolyTuple, DrinfeldError> {
        self.same_type(other)?;
        let mut out = self.clone();
        for (p, w) in &other.factors {
            out.absorb(p.clone(), w);
        }
        Ok(out)
    }

    /// `π* = Π π_{−w₀λ_j, a_j}`.
    pub fn dual(&self, rs: &RootSystem) -> PolyTuple {
        PolyTuple {
            lie_type: self.lie_type,
            factors: self.factors.iter().map(|(p, w)| (p.clone(), rs.minus_w0(w))).collect(),
        }
    }

    /// `λ_π = Σ_j λ_j`.
    pub fn lambda_pi(&self) -> Weight {
        let n = self.lie_type.rank();
        self.factors.values().fold(Weight::zero(n), |acc, w| acc.add(w))
    }

    /// `χ_π = Σ_j χ_{λ_j, a_j}`.
    pub fn spectral_character(&self, gamma: &GammaGroup) -> SpectralCharacter {
        let mut chi = SpectralCharacter::zero();
        for (p, w) in &self.factors {
            chi.insert(p.clone(), gamma.project(w));
        }
        chi
    }

    /// Whether `V(π1)` and `V(π2)` lie in the same block.
    pub fn same_block(&self, other: &PolyTuple, gamma: &GammaGroup) -> Result<bool, DrinfeldError> {
        self.same_type(other)?;
        Ok(self.spectral_character(gamma) == other.spectral_character(gamma))
    }

    /// Canonical name of the block: `(a, λ_{χ(a)})` over the support of `χ_π`.
    pub fn block_label(&self, rs: &RootSystem, gamma: &GammaGroup) -> Vec<(SpectralPoint, Weight)> {
        self.spectral_character(gamma).block_label(rs, gamma)
    }

    /// Expand back to coefficient lists (ascending powers of `u`).
    pub fn to_coefficients(&self) -> Result<Vec<Vec<BigRational>>, DrinfeldError> {
        let n = self.lie_type.rank();
        let mut polys = vec![vec![BigRational::one()]; n];
        for (p, w) in &self.factors {
            let a = match p {
                SpectralPoint::Rational(a) => a,
                SpectralPoint::Symbolic(s) => return Err(DrinfeldError::Symbolic(s.clone())),
            };
            let linear = vec![BigRational::one(), -a.clone()];
            for (i, &m) in w.0.iter().enumerate() {
                for _ in 0..m {
                    polys[i] = poly_mul(&polys[i], &linear);
                }
            }
        }
        Ok(polys)
    }

    /// Factor a tuple given as coefficient lists (ascending powers of `u`).
    /// Each polynomial must have constant term 1 and split over `ℚ`.
    pub fn from_coefficients(rs: &RootSystem, polys: &[Vec<BigRational>]) -> Result<PolyTuple, DrinfeldError> {
        let n = rs.rank();
        if polys.len() != n {
            return Err(DrinfeldError::Arity { expected: n, got: polys.len() });
        }
        let mut out = PolyTuple::one(rs.lie_type());
        for (i, poly) in polys.iter().enumerate() {
            let mut coeffs = poly.clone();
            while coeffs.last().is_some_and(|c| c.is_zero()) {
                coeffs.pop();
            }
            if coeffs.first() != Some(&BigRational::one()) {
                return Err(DrinfeldError::ConstantTerm { index: i + 1 });
            }
            for (a, m) in rational_reciprocal_roots(&coeffs).ok_or(DrinfeldError::IrrationalRoots { index: i + 1 })? {
                out.absorb(SpectralPoint::Rational(a), &Weight::fundamental(n, i + 1).scale(m));
            }
        }
        Ok(out)
    }

    /// Parse the JSON forms `{"factors":[...]}` (optionally with `"type"`)
    /// or `{"coeffs":[[...],...]}`.
    pub fn from_json(rs: &RootSystem, text: &str) -> Result<PolyTuple, DrinfeldError> {
        let raw: TupleJson = serde_json::from_str(text).map_err(|e| DrinfeldError::Json(e.to_string()))?;
        if let Some(t) = raw.lie_type {
            let found: LieType = t.parse()?;
            if found != rs.lie_type() {
                return Err(DrinfeldError::TypeMismatch { expected: rs.lie_type(), found });
            }
        }
        match (raw.factors, raw.coeffs) {
            (Some(factors), None) => {
                Self::from_factors(rs, factors.into_iter().map(|f| (f.point, Weight(f.weight))))
            }
            (None, Some(coeffs)) => {
                let polys = coeffs
                    .into_iter()
                    .map(|p| p.into_iter().map(Coefficient::into_rational).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()?;
                Self::from_coefficients(rs, &polys)
            }
            _ => Err(DrinfeldError::Json("expected exactly one of \"factors\" or \"coeffs\"".into())),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let factors: Vec<_> = self
            .factors
            .iter()
            .map(|(p, w)| serde_json::json!({"point": p, "weight": w}))
            .collect();
        serde_json::json!({"type": self.lie_type.to_string(), "factors": factors})
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct TupleJson {
    #[serde(rename = "type", default)]
    lie_type: Option<String>,
    #[serde(default)]
    factors: Option<Vec<FactorJson>>,
    #[serde(default)]
    coeffs: Option<Vec<Vec<Coefficient>>>,
}

#[derive(Deserialize)]
struct FactorJson {
    point: SpectralPoint,
    weight: Vec<i64>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Int(i64),
    Frac([i64; 2]),
    Text(String),
}

impl Coefficient {
    fn into_rational(self) -> Result<BigRational, DrinfeldError> {
        match self {
            Coefficient::Int(n) => Ok(BigRational::from_integer(n.into())),
            Coefficient::Frac([_, 0]) => Err(DrinfeldError::Json("zero denominator".into())),
            Coefficient::Frac([n, d]) => Ok(BigRational::new(n.into(), d.into())),
            Coefficient::Text(s) => s.parse().map_err(|_| DrinfeldError::Json(format!("bad coefficient {s:?}"))),
        }
    }
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Divide `p` by `(1 − a u)`, returning the quotient if the division is exact.
fn divide_linear(p: &[BigRational], a: &BigRational) -> Option<Vec<BigRational>> {
    // p = (1 − a u) q  ⇒  q_0 = p_0, q_k = p_k + a q_{k−1}
    let deg = p.len() - 1;
    let mut q = Vec::with_capacity(deg);
    let mut prev = BigRational::zero();
    for k in 0..deg {
        let qk = &p[k] + a * &prev;
        q.push(qk.clone());
        prev = qk;
    }
    (p[deg].clone() + a * prev).is_zero().then_some(q)
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

/// All `(a, m)` with `(1 − a u)^m` exactly dividing `p`, provided `p`
/// factors completely into such terms; `None` otherwise.
fn rational_reciprocal_roots(p: &[BigRational]) -> Option<Vec<(BigRational, i64)>> {
    let mut p = p.to_vec();
    if p.len() == 1 {
        return Some(Vec::new());
    }
    // Clear denominators: the roots a of u^d p(1/u) are p/q with p | c_top, q | c_0.
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let tops = divisors(ints.last().unwrap())?;
    let bottoms = divisors(&ints[0])?;
    let mut found = Vec::new();
    for num in &tops {
        for den in &bottoms {
            for sign in [1, -1] {
                let a = BigRational::new(num * sign, den.clone());
                if found.iter().any(|(b, _)| b == &a) {
                    continue;
                }
                let mut m = 0;
                while p.len() > 1 {
                    match divide_linear(&p, &a) {
                        Some(q) => {
                            p = q;
                            m += 1;
                        }
                        None => break,
                    }
                }
                if m > 0 {
                    found.push((a, m));
                }
            }
        }
    }
    (p.len() == 1).then_some(found)
}

/// A finitely supported function `ℂ^× → Γ`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct SpectralCharacter {
    support: BTreeMap<SpectralPoint, GammaElement>,
}

impl SpectralCharacter {
    pub fn zero() -> Self {
        Self::default()
    }

    /// Add `γ` at `a`, dropping the entry if the sum is the identity.
    pub fn insert(&mut self, a: SpectralPoint, g: GammaElement) {
        let sum = match self.support.remove(&a) {
            Some(old) => &old + &g,
            None => g,
        };
        if !sum.is_identity() {
            self.support.insert(a, sum);
        }
    }

    pub fn support(&self) -> &BTreeMap<SpectralPoint, GammaElement> {
        &self.support
    }

    pub fn get(&self, a: &SpectralPoint) -> Option<&GammaElement> {
        self.support.get(a)
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    pub fn add(&self, other: &SpectralCharacter) -> SpectralCharacter {
        let mut out = self.clone();
        for (a, g) in &other.support {
            out.insert(a.clone(), g.clone());
        }
        out
    }

    pub fn neg(&self) -> SpectralCharacter {
        SpectralCharacter { support: self.support.iter().map(|(a, g)| (a.clone(), -g)).collect() }
    }

    pub fn block_label(&self, rs: &RootSystem, gamma: &GammaGroup) -> Vec<(SpectralPoint, Weight)> {
        self.support.iter().map(|(a, g)| (a.clone(), gamma.lambda_gamma(rs, g))).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        let entries: Vec<_> = self
            .support
            .iter()
            .map(|(a, g)| serde_json::json!({"point": a, "class": g.residues}))
            .collect();
        serde_json::Value::Array(entries)
    }
}
