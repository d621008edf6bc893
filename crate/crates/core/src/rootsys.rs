//! Root data for the finite-type simple Lie algebras.
//!
//! Nodes are numbered as in the following diagrams (shaded nodes marked `*`);
//! this numbering is used by every other module, including the linking chain
//! recursions.
//!
//! ```text
//! A_n   1*- 2 - ... - n
//! B_n   1 - 2 - ... - (n-1) => n*        (node n short)
//! C_n   1*- 2 - ... - (n-1) <= n         (node n long)
//! D_n   1 - 2 - ... - (n-2) - (n-1)      node n hangs off n-2;
//!                     |                  shaded: {n} for n odd,
//!                     n                  {n-1, n} for n even
//! E_6   1*- 2 - 3 - 4 - 5,   6 hangs off 3
//! E_7   1*- 2 - 3 - 4 - 5 - 6,   7 hangs off 4
//! E_8   1*- 2 - 3 - 4 - 5 - 6 - 7,   8 hangs off 5
//! F_4   1*- 2 <= 3 - 4                   (nodes 1, 2 short)
//! G_2   1* <≡ 2                          (node 1 short)
//! ```
//!
//! [`LieType::bourbaki_labels`] translates to Bourbaki's numbering.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::linalg::{q, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("cannot parse Lie type {0:?}; expected a family letter A-G followed by the rank, e.g. \"D5\"")]
    Parse(String),
    #[error("inadmissible rank {rank} for type {family}: {reason}")]
    InadmissibleRank { family: char, rank: usize, reason: &'static str },
    #[error("weight {weight} has length {got}, expected rank {rank}")]
    WrongLength { weight: Weight, got: usize, rank: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type such as `A2` or `E7`; the rank is validated on construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    pub fn new(family: Family, rank: usize) -> Result<Self, RootSystemError> {
        let bad = |reason| Err(RootSystemError::InadmissibleRank { family: family.letter(), rank, reason });
        match family {
            Family::A if rank < 1 => bad("A_n needs n >= 1"),
            Family::B if rank < 2 => bad("B_n needs n >= 2"),
            Family::C if rank < 2 => bad("C_n needs n >= 2"),
            Family::D if rank < 4 => bad("D_n needs n >= 4 (D2, D3 coincide with A-series types)"),
            Family::E if !(6..=8).contains(&rank) => bad("E_n exists only for n in {6, 7, 8}"),
            Family::F if rank != 4 => bad("F only in rank 4"),
            Family::G if rank != 2 => bad("G only in rank 2"),
            _ => Ok(LieType { family, rank }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// All admissible types with rank at most `max_rank`, in a fixed order.
    pub fn all_up_to(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            for n in 1..=max_rank {
                if let Ok(t) = LieType::new(fam, n) {
                    out.push(t);
                }
            }
        }
        out
    }

    /// `out[i]` is the Bourbaki label of node `i + 1`.
    pub fn bourbaki_labels(&self) -> Vec<usize> {
        match (self.family, self.rank) {
            (Family::E, 6) => vec![1, 3, 4, 5, 6, 2],
            (Family::E, 7) => vec![7, 6, 5, 4, 3, 1, 2],
            (Family::E, 8) => vec![8, 7, 6, 5, 4, 3, 1, 2],
            (Family::F, 4) => vec![4, 3, 2, 1],
            (_, n) => (1..=n).collect(),
        }
    }

    /// Half squared lengths `(α_i, α_i)/2` of the simple roots, short roots = 1.
    fn half_lengths(&self) -> Vec<i64> {
        let n = self.rank;
        match self.family {
            Family::A | Family::D | Family::E => vec![1; n],
            Family::B => (1..=n).map(|i| if i < n { 2 } else { 1 }).collect(),
            Family::C => (1..=n).map(|i| if i < n { 1 } else { 2 }).collect(),
            Family::F => vec![1, 1, 2, 2],
            Family::G => vec![1, 3],
        }
    }

    /// Edges of the Dynkin diagram, 1-based.
    fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank;
        let chain = |len: usize| (1..len).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A | Family::B | Family::C | Family::F | Family::G => chain(n),
            Family::D => {
                let mut e = chain(n - 1);
                e.push((n - 2, n));
                e
            }
            Family::E => {
                let mut e = chain(n - 1);
                let branch = match n {
                    6 => 3,
                    7 => 4,
                    _ => 5,
                };
                e.push((branch, n));
                e
            }
        }
    }

    /// Indices (1-based) of the shaded nodes.
    pub fn shaded_nodes(&self) -> Vec<usize> {
        let n = self.rank;
        match self.family {
            Family::B => vec![n],
            Family::D if n % 2 == 1 => vec![n],
            Family::D => vec![n - 1, n],
            _ => vec![1],
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

impl FromStr for LieType {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(RootSystemError::Parse(s.to_string())),
        };
        let rank: usize = chars.as_str().parse().map_err(|_| RootSystemError::Parse(s.to_string()))?;
        LieType::new(family, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// An integral weight in the basis of fundamental weights.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `ω_i`, 1-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut w = Weight::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> Weight {
        Weight(self.0.iter().map(|a| a * c).collect())
    }

    pub fn neg(&self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// An element of the root lattice in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RootVector(pub Vec<i64>);

impl RootVector {
    pub fn simple(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i - 1] = 1;
        RootVector(v)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        RootVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn scale(&self, c: i64) -> RootVector {
        RootVector(self.0.iter().map(|a| a * c).collect())
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = α_j(h_i)`; column `j` holds `α_j` in the ω-basis.
    cartan: Vec<Vec<i64>>,
    half_lengths: Vec<i64>,
    positive_roots: Vec<RootVector>,
    positive_roots_omega: Vec<Weight>,
    root_set: HashSet<Weight>,
    theta: RootVector,
    shaded: Vec<usize>,
    dual_perm: Vec<usize>,
}

impl RootSystem {
    pub fn build(lie_type: LieType) -> RootSystem {
        let n = lie_type.rank();
        let d = lie_type.half_lengths();
        let mut cartan = vec![vec![0i64; n]; n];
        for (i, row) in cartan.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in lie_type.edges() {
            let (i, j) = (a - 1, b - 1);
            let sym = -d[i].max(d[j]);
            cartan[i][j] = sym / d[i];
            cartan[j][i] = sym / d[j];
        }

        let mut rs = RootSystem {
            lie_type,
            cartan,
            half_lengths: d,
            positive_roots: Vec::new(),
            positive_roots_omega: Vec::new(),
            root_set: HashSet::new(),
            theta: RootVector(vec![0; n]),
            shaded: lie_type.shaded_nodes(),
            dual_perm: Vec::new(),
        };
        rs.positive_roots = rs.close_positive_roots();
        rs.positive_roots_omega = rs.positive_roots.iter().map(|r| rs.root_to_weight(r)).collect();
        for w in &rs.positive_roots_omega {
            rs.root_set.insert(w.clone());
            rs.root_set.insert(w.neg());
        }
        rs.theta = rs.positive_roots.iter().max_by_key(|r| r.height()).cloned().expect("nonempty");
        rs.dual_perm = (1..=n)
            .map(|i| {
                let image = rs.dominant_conjugate(&Weight::fundamental(n, i).neg());
                image.0.iter().position(|&c| c == 1).expect("-w0 permutes fundamental weights") + 1
            })
            .collect();
        rs
    }

    /// Positive roots by height: `β + α_i` is a root iff the `α_i`-string
    /// through `β` extends upward, i.e. `p − ⟨β, α_i^∨⟩ > 0`.
    fn close_positive_roots(&self) -> Vec<RootVector> {
        let n = self.rank();
        let mut roots: Vec<RootVector> = (1..=n).map(|i| RootVector::simple(n, i)).collect();
        let mut known: HashSet<RootVector> = roots.iter().cloned().collect();
        let mut layer = roots.clone();
        while !layer.is_empty() {
            let mut next = Vec::new();
            for beta in &layer {
                let beta_w = self.root_to_weight(beta);
                for i in 0..n {
                    let mut p = 0;
                    let mut down = beta.clone();
                    loop {
                        down.0[i] -= 1;
                        if known.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let q_up = p - beta_w.0[i];
                    if q_up > 0 {
                        let mut up = beta.clone();
                        up.0[i] += 1;
                        if known.insert(up.clone()) {
                            next.push(up);
                        }
                    }
                }
            }
            next.sort();
            roots.extend(next.iter().cloned());
            layer = next;
        }
        roots
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// `(α_i, α_i)/2` with the short roots normalized to 1.
    pub fn half_lengths(&self) -> &[i64] {
        &self.half_lengths
    }

    pub fn positive_roots(&self) -> &[RootVector] {
        &self.positive_roots
    }

    /// Positive roots in the ω-basis, same order as [`Self::positive_roots`].
    pub fn positive_roots_omega(&self) -> &[Weight] {
        &self.positive_roots_omega
    }

    pub fn theta(&self) -> &RootVector {
        &self.theta
    }

    pub fn theta_weight(&self) -> Weight {
        self.root_to_weight(&self.theta)
    }

    pub fn shaded_nodes(&self) -> &[usize] {
        &self.shaded
    }

    /// `dual_perm[i-1] = σ(i)` with `−w₀ ω_i = ω_σ(i)`.
    pub fn dual_perm(&self) -> &[usize] {
        &self.dual_perm
    }

    pub fn rho(&self) -> Weight {
        Weight(vec![1; self.rank()])
    }

    pub fn is_root(&self, w: &Weight) -> bool {
        self.root_set.contains(w)
    }

    pub fn check_weight(&self, w: &Weight) -> Result<(), RootSystemError> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(RootSystemError::WrongLength { weight: w.clone(), got: w.rank(), rank: self.rank() })
        }
    }

    /// `α_i` in the ω-basis, 1-based.
    pub fn simple_root(&self, i: usize) -> Weight {
        Weight(self.cartan.iter().map(|row| row[i - 1]).collect())
    }

    pub fn root_to_weight(&self, r: &RootVector) -> Weight {
        let n = self.rank();
        Weight((0..n).map(|i| (0..n).map(|j| self.cartan[i][j] * r.0[j]).sum()).collect())
    }

    /// `C⁻¹·coords`: the weight expressed in the basis of simple roots.
    pub fn weight_to_root_coords(&self, w: &Weight) -> Vec<Q> {
        let n = self.rank();
        let a: Vec<Vec<Q>> = self.cartan.iter().map(|row| row.iter().map(|&c| q(c)).collect()).collect();
        let b: Vec<Q> = w.0.iter().map(|&c| q(c)).collect();
        crate::linalg::solve(&a, &b, n).expect("Cartan matrix is invertible")
    }

    /// Root coordinates when the weight lies in `Q`.
    pub fn integral_root_coords(&self, w: &Weight) -> Option<RootVector> {
        let coords = self.weight_to_root_coords(w);
        coords
            .iter()
            .map(|c| c.is_integer().then(|| i64::try_from(c.to_integer()).ok()).flatten())
            .collect::<Option<Vec<_>>>()
            .map(RootVector)
    }

    pub fn in_root_lattice(&self, w: &Weight) -> bool {
        self.integral_root_coords(w).is_some()
    }

    /// `λ ≥ μ` iff `λ − μ ∈ Q⁺`.
    pub fn dominance_ge(&self, lambda: &Weight, mu: &Weight) -> bool {
        self.integral_root_coords(&lambda.sub(mu)).is_some_and(|r| r.is_nonnegative())
    }

    /// `−w₀λ`, a coordinate permutation.
    pub fn minus_w0(&self, lambda: &Weight) -> Weight {
        let mut out = Weight::zero(self.rank());
        for (i, &c) in lambda.0.iter().enumerate() {
            out.0[self.dual_perm[i] - 1] = c;
        }
        out
    }

    /// Simple reflection `s_i` (1-based) applied to a weight.
    pub fn reflect(&self, w: &Weight, i: usize) -> Weight {
        let c = w.0[i - 1];
        if c == 0 {
            return w.clone();
        }
        let mut out = w.clone();
        for (k, row) in self.cartan.iter().enumerate() {
            out.0[k] -= c * row[i - 1];
        }
        out
    }

    /// The unique dominant weight in the Weyl orbit of `w`.
    pub fn dominant_conjugate(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        while let Some(i) = cur.0.iter().position(|&c| c < 0) {
            cur = self.reflect(&cur, i + 1);
        }
        cur
    }

    /// `(λ, β)` for `β = Σ c_i α_i`, using `(ω_i, α_j) = δ_ij d_j`.
    pub fn pair_with_root(&self, lambda: &Weight, beta: &RootVector) -> i64 {
        lambda.0.iter().zip(&beta.0).zip(&self.half_lengths).map(|((l, c), d)| l * c * d).sum()
    }

    /// Coroot pairing `⟨λ, β^∨⟩ = 2(λ, β)/(β, β)`.
    pub fn coroot_pairing(&self, lambda: &Weight, beta: &RootVector) -> i64 {
        let bw = self.root_to_weight(beta);
        let num = 2 * self.pair_with_root(lambda, beta);
        let den = self.pair_with_root(&bw, beta);
        debug_assert_eq!(num % den, 0);
        num / den
    }

    /// Number of positive roots for the type, from the classical formulas.
    pub fn classical_positive_root_count(lie_type: LieType) -> usize {
        let n = lie_type.rank();
        match (lie_type.family(), n) {
            (Family::A, _) => n * (n + 1) / 2,
            (Family::B | Family::C, _) => n * n,
            (Family::D, _) => n * (n - 1),
            (Family::E, 6) => 36,
            (Family::E, 7) => 63,
            (Family::E, _) => 120,
            (Family::F, _) => 24,
            (Family::G, _) => 6,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q_frac;

    fn rs(s: &str) -> RootSystem {
        RootSystem::build(s.parse().unwrap())
    }

    #[test]
    fn a2_cartan_and_theta() {
        let a2 = rs("A2");
        assert_eq!(a2.cartan(), &[vec![2, -1], vec![-1, 2]]);
        assert_eq!(a2.theta(), &RootVector(vec![1, 1]));
        assert_eq!(a2.theta_weight(), Weight(vec![1, 1]));
    }

    #[test]
    fn a1_theta_is_twice_omega() {
        let a1 = rs("A1");
        assert_eq!(a1.cartan(), &[vec![2]]);
        assert_eq!(a1.theta_weight(), Weight(vec![2]));
    }

    #[test]
    fn g2_short_first_node() {
        let g2 = rs("G2");
        assert_eq!(g2.simple_root(1), Weight(vec![2, -1]));
        assert_eq!(g2.simple_root(2), Weight(vec![-3, 2]));
        assert_eq!(g2.theta(), &RootVector(vec![3, 2]));
        assert_eq!(g2.theta_weight(), Weight(vec![0, 1]));
        assert_eq!(g2.positive_roots().len(), 6);
    }

    #[test]
    fn inadmissible_ranks_rejected() {
        for s in ["D3", "D2", "B1", "C1", "E5", "E9", "F3", "G3", "A0"] {
            assert!(s.parse::<LieType>().is_err(), "{s} should be rejected");
        }
        assert!("X3".parse::<LieType>().is_err());
        assert_eq!("e7".parse::<LieType>().unwrap().to_string(), "E7");
    }

    #[test]
    fn positive_root_counts() {
        for t in LieType::all_up_to(8) {
            let r = RootSystem::build(t);
            assert_eq!(r.positive_roots().len(), RootSystem::classical_positive_root_count(t), "{t}");
            for beta in r.positive_roots() {
                assert!(r.dominance_ge(&r.theta_weight(), &r.root_to_weight(beta)), "{t}: θ ≥ {beta:?}");
            }
            assert!(r.theta_weight().is_dominant());
        }
    }

    #[test]
    fn weight_to_root_coords_examples() {
        let a2 = rs("A2");
        assert_eq!(a2.weight_to_root_coords(&Weight(vec![1, 0])), vec![q_frac(2, 3), q_frac(1, 3)]);
        assert_eq!(a2.weight_to_root_coords(&Weight(vec![0, 0])), vec![q(0), q(0)]);
        let a1 = rs("A1");
        assert_eq!(a1.weight_to_root_coords(&Weight(vec![2])), vec![q(1)]);
    }

    #[test]
    fn dominance_examples() {
        let a2 = rs("A2");
        assert!(a2.dominance_ge(&a2.theta_weight(), &Weight(vec![0, 0])));
        assert!(!a2.dominance_ge(&Weight(vec![1, 0]), &Weight(vec![0, 0])));
        let a1 = rs("A1");
        assert!(a1.dominance_ge(&Weight(vec![3]), &Weight(vec![1])));
    }

    #[test]
    fn minus_w0_tables() {
        assert_eq!(rs("A2").minus_w0(&Weight(vec![1, 0])), Weight(vec![0, 1]));
        assert_eq!(rs("A4").dual_perm(), &[4, 3, 2, 1]);
        assert_eq!(rs("D5").dual_perm(), &[1, 2, 3, 5, 4]);
        assert_eq!(rs("D4").dual_perm(), &[1, 2, 3, 4]);
        assert_eq!(rs("E6").dual_perm(), &[5, 4, 3, 2, 1, 6]);
        for t in ["B3", "C4", "E7", "E8", "F4", "G2", "D6"] {
            let r = rs(t);
            assert_eq!(r.dual_perm(), (1..=r.rank()).collect::<Vec<_>>().as_slice(), "{t}");
        }
        for t in LieType::all_up_to(8) {
            let r = RootSystem::build(t);
            for i in 0..t.rank() {
                assert_eq!(r.dual_perm()[r.dual_perm()[i] - 1], i + 1, "{t}: not an involution");
            }
        }
    }

    #[test]
    fn shaded_nodes_match_diagrams() {
        assert_eq!(rs("A5").shaded_nodes(), &[1]);
        assert_eq!(rs("B4").shaded_nodes(), &[4]);
        assert_eq!(rs("C3").shaded_nodes(), &[1]);
        assert_eq!(rs("D5").shaded_nodes(), &[5]);
        assert_eq!(rs("D6").shaded_nodes(), &[5, 6]);
        for t in ["E6", "E7", "E8", "F4", "G2"] {
            assert_eq!(rs(t).shaded_nodes(), &[1], "{t}");
        }
    }

    /// Bourbaki Cartan matrices of the exceptional types, `C_ij = ⟨α_j, α_i^∨⟩`.
    fn bourbaki_cartan(t: &str) -> Vec<Vec<i64>> {
        let (n, edges, lengths): (usize, Vec<(usize, usize)>, Vec<i64>) = match t {
            "E6" => (6, vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)], vec![1; 6]),
            "E7" => (7, vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (2, 4)], vec![1; 7]),
            "E8" => (8, vec![(1, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (2, 4)], vec![1; 8]),
            "F4" => (4, vec![(1, 2), (2, 3), (3, 4)], vec![2, 2, 1, 1]),
            "G2" => (2, vec![(1, 2)], vec![1, 3]),
            _ => unreachable!(),
        };
        let mut c = vec![vec![0; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for (a, b) in edges {
            let s = -lengths[a - 1].max(lengths[b - 1]);
            c[a - 1][b - 1] = s / lengths[a - 1];
            c[b - 1][a - 1] = s / lengths[b - 1];
        }
        c
    }

    #[test]
    fn bourbaki_relabeling_is_an_isomorphism() {
        for t in ["E6", "E7", "E8", "F4", "G2"] {
            let r = rs(t);
            let perm = r.lie_type().bourbaki_labels();
            let b = bourbaki_cartan(t);
            for i in 0..r.rank() {
                for j in 0..r.rank() {
                    assert_eq!(r.cartan()[i][j], b[perm[i] - 1][perm[j] - 1], "{t} ({i},{j})");
                }
            }
        }
    }

    #[test]
    fn adjoint_node_positions() {
        // θ is a fundamental weight (or 2ω_1 in type C, ω_1+ω_n in type A).
        assert_eq!(rs("E6").theta_weight(), Weight::fundamental(6, 6));
        assert_eq!(rs("E7").theta_weight(), Weight::fundamental(7, 6));
        assert_eq!(rs("E8").theta_weight(), Weight::fundamental(8, 1));
        assert_eq!(rs("F4").theta_weight(), Weight::fundamental(4, 4));
        assert_eq!(rs("B4").theta_weight(), Weight::fundamental(4, 2));
        assert_eq!(rs("B2").theta_weight(), Weight(vec![0, 2]));
        assert_eq!(rs("C3").theta_weight(), Weight(vec![2, 0, 0]));
        assert_eq!(rs("D5").theta_weight(), Weight::fundamental(5, 2));
    }
}
