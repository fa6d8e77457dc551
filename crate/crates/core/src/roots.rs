//! Root-system data for the classical Lie types A, B, C and D.
//!
//! Everything is expressed in standard-basis (epsilon) coordinates. Simple-root
//! coordinates only appear at the API boundary through [`weight_from_simple`]
//! and [`simple_coords`].

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieType {
    A,
    B,
    C,
    D,
}

impl LieType {
    pub fn min_rank(self) -> usize {
        match self {
            LieType::A => 1,
            LieType::B => 2,
            LieType::C => 3,
            LieType::D => 4,
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = match self {
            LieType::A => 'A',
            LieType::B => 'B',
            LieType::C => 'C',
            LieType::D => 'D',
        };
        write!(f, "{c}")
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "A" | "a" => Ok(LieType::A),
            "B" | "b" => Ok(LieType::B),
            "C" | "c" => Ok(LieType::C),
            "D" | "d" => Ok(LieType::D),
            other => Err(Error::Parse(format!("unknown Lie type `{other}`"))),
        }
    }
}

/// A validated (type, rank) pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystem {
    ty: LieType,
    rank: usize,
}

impl RootSystem {
    pub fn new(ty: LieType, rank: usize) -> Result<Self> {
        if rank < ty.min_rank() {
            return domain(format!(
                "type {ty} requires rank >= {}, got {rank}",
                ty.min_rank()
            ));
        }
        Ok(RootSystem { ty, rank })
    }

    pub fn lie_type(&self) -> LieType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Dimension of the epsilon space: r+1 for A_r, r otherwise.
    pub fn ambient(&self) -> usize {
        match self.ty {
            LieType::A => self.rank + 1,
            _ => self.rank,
        }
    }

    pub fn positive_roots(&self) -> Vec<PositiveRoot> {
        let d = self.ambient();
        let mut out = Vec::new();
        for i in 1..=d {
            for j in i + 1..=d {
                out.push(PositiveRoot::minus(i, j));
            }
        }
        if self.ty != LieType::A {
            for i in 1..=d {
                for j in i + 1..=d {
                    out.push(PositiveRoot::plus(i, j));
                }
            }
        }
        match self.ty {
            LieType::B => out.extend((1..=d).map(PositiveRoot::single)),
            LieType::C => out.extend((1..=d).map(PositiveRoot::double)),
            _ => {}
        }
        out.sort();
        out
    }

    pub fn simple_root(&self, k: usize) -> Result<Weight> {
        if k == 0 || k > self.rank {
            return domain(format!("simple root index {k} out of range 1..={}", self.rank));
        }
        let d = self.ambient();
        let r = self.rank;
        let root = if k < r || self.ty == LieType::A {
            PositiveRoot::minus(k, k + 1)
        } else {
            match self.ty {
                LieType::B => PositiveRoot::single(r),
                LieType::C => PositiveRoot::double(r),
                LieType::D => PositiveRoot::plus(r - 1, r),
                LieType::A => unreachable!(),
            }
        };
        root.to_weight(d)
    }

    /// Simple-root coefficients of the highest root.
    pub fn highest_root_coeffs(&self) -> Vec<i64> {
        let r = self.rank;
        match self.ty {
            LieType::A => vec![1; r],
            LieType::B => (1..=r).map(|k| if k == 1 { 1 } else { 2 }).collect(),
            LieType::C => (1..=r).map(|k| if k == r { 1 } else { 2 }).collect(),
            LieType::D => (1..=r)
                .map(|k| if k == 1 || k >= r - 1 { 1 } else { 2 })
                .collect(),
        }
    }

    pub fn highest_root(&self) -> Weight {
        weight_from_simple(self, &self.highest_root_coeffs()).expect("coefficient length is rank")
    }

    /// True when every simple-root coordinate of `w` is nonnegative (rational
    /// coordinates allowed). This is necessary for `w` to be a sum of
    /// positive roots.
    pub fn in_cone(&self, w: &[i64]) -> bool {
        let mut prefix = 0i64;
        let d = w.len();
        match self.ty {
            LieType::A => {
                for (k, &x) in w.iter().enumerate() {
                    prefix += x;
                    if prefix < 0 {
                        return false;
                    }
                    if k + 1 == d && prefix != 0 {
                        return false;
                    }
                }
                true
            }
            LieType::B | LieType::C => w.iter().all(|&x| {
                prefix += x;
                prefix >= 0
            }),
            LieType::D => {
                if d < 2 {
                    return w.iter().all(|&x| x >= 0);
                }
                for &x in &w[..d - 2] {
                    prefix += x;
                    if prefix < 0 {
                        return false;
                    }
                }
                let p = prefix + w[d - 2];
                // coefficients of alpha_{r-1} and alpha_r, both times two
                p - w[d - 1] >= 0 && p + w[d - 1] >= 0
            }
        }
    }
}

/// Shape of a positive root. The declaration order is the canonical kind order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RootKind {
    /// e_i - e_j
    EMinus,
    /// e_i + e_j
    EPlus,
    /// e_i
    ESingle,
    /// 2 e_i
    EDouble,
}

/// A positive root, ordered by (kind, i, j). `j` is 0 for single/double roots.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PositiveRoot {
    pub kind: RootKind,
    pub i: usize,
    pub j: usize,
}

impl PositiveRoot {
    pub fn minus(i: usize, j: usize) -> Self {
        PositiveRoot { kind: RootKind::EMinus, i, j }
    }

    pub fn plus(i: usize, j: usize) -> Self {
        PositiveRoot { kind: RootKind::EPlus, i, j }
    }

    pub fn single(i: usize) -> Self {
        PositiveRoot { kind: RootKind::ESingle, i, j: 0 }
    }

    pub fn double(i: usize) -> Self {
        PositiveRoot { kind: RootKind::EDouble, i, j: 0 }
    }

    pub fn is_type_a(&self) -> bool {
        self.kind == RootKind::EMinus
    }

    /// Largest epsilon index the root touches.
    pub fn max_index(&self) -> usize {
        self.i.max(self.j)
    }

    fn check(&self) -> Result<()> {
        let ok = match self.kind {
            RootKind::EMinus | RootKind::EPlus => self.i >= 1 && self.i < self.j,
            RootKind::ESingle | RootKind::EDouble => self.i >= 1,
        };
        if ok {
            Ok(())
        } else {
            domain(format!("malformed root {self}"))
        }
    }

    /// Expand into epsilon coordinates of the given dimension.
    pub fn to_weight(&self, ambient: usize) -> Result<Weight> {
        self.check()?;
        if self.max_index() > ambient {
            return domain(format!("root {self} does not fit in dimension {ambient}"));
        }
        let mut v = vec![0i64; ambient];
        self.add_to(&mut v, 1);
        Ok(Weight(v))
    }

    /// `v += times * self`, assuming the indices fit.
    pub(crate) fn add_to(&self, v: &mut [i64], times: i64) {
        match self.kind {
            RootKind::EMinus => {
                v[self.i - 1] += times;
                v[self.j - 1] -= times;
            }
            RootKind::EPlus => {
                v[self.i - 1] += times;
                v[self.j - 1] += times;
            }
            RootKind::ESingle => v[self.i - 1] += times,
            RootKind::EDouble => v[self.i - 1] += 2 * times,
        }
    }

    /// Coefficient of e_k in this root.
    pub(crate) fn coord(&self, k: usize) -> i64 {
        match self.kind {
            RootKind::EMinus if k == self.i => 1,
            RootKind::EMinus if k == self.j => -1,
            RootKind::EPlus if k == self.i || k == self.j => 1,
            RootKind::ESingle if k == self.i => 1,
            RootKind::EDouble if k == self.i => 2,
            _ => 0,
        }
    }
}

impl fmt::Display for PositiveRoot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            RootKind::EMinus => write!(f, "{}-{}", self.i, self.j),
            RootKind::EPlus => write!(f, "{}+{}", self.i, self.j),
            RootKind::ESingle => write!(f, "{}", self.i),
            RootKind::EDouble => write!(f, "2*{}", self.i),
        }
    }
}

impl FromStr for PositiveRoot {
    type Err = Error;

    /// Accepts `i-j`, `i+j`, `i` and `2*i`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let num = |t: &str| -> Result<usize> {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad root `{s}`")))
        };
        let root = if let Some(rest) = s.strip_prefix("2*") {
            PositiveRoot::double(num(rest)?)
        } else if let Some((a, b)) = s.split_once('-') {
            PositiveRoot::minus(num(a)?, num(b)?)
        } else if let Some((a, b)) = s.split_once('+') {
            PositiveRoot::plus(num(a)?, num(b)?)
        } else {
            PositiveRoot::single(num(s)?)
        };
        root.check().map_err(|_| Error::Parse(format!("bad root `{s}`")))?;
        Ok(root)
    }
}

/// Integer vector in epsilon coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(ambient: usize) -> Self {
        Weight(vec![0; ambient])
    }

    pub fn ambient(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }

    pub fn scaled(&self, t: i64) -> Weight {
        Weight(self.0.iter().map(|x| x * t).collect())
    }
}

impl From<Vec<i64>> for Weight {
    fn from(v: Vec<i64>) -> Self {
        Weight(v)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn positive_roots(ty: LieType, rank: usize) -> Result<Vec<PositiveRoot>> {
    Ok(RootSystem::new(ty, rank)?.positive_roots())
}

pub fn root_to_weight(root: PositiveRoot, ambient: usize) -> Result<Weight> {
    root.to_weight(ambient)
}

/// Expand `sum coeffs_k alpha_k` into epsilon coordinates.
pub fn weight_from_simple(sys: &RootSystem, coeffs: &[i64]) -> Result<Weight> {
    if coeffs.len() != sys.rank() {
        return domain(format!(
            "expected {} simple-root coefficients, got {}",
            sys.rank(),
            coeffs.len()
        ));
    }
    let mut v = vec![0i64; sys.ambient()];
    for (k, &c) in coeffs.iter().enumerate() {
        let alpha = sys.simple_root(k + 1)?;
        for (x, a) in v.iter_mut().zip(alpha.0) {
            *x += c * a;
        }
    }
    Ok(Weight(v))
}

pub fn highest_root(ty: LieType, rank: usize) -> Result<Weight> {
    Ok(RootSystem::new(ty, rank)?.highest_root())
}

/// Inverse of [`weight_from_simple`]: solves the triangular system. Returns
/// `None` when `w` is not in the root lattice.
pub fn simple_coords(sys: &RootSystem, w: &Weight) -> Result<Option<Vec<i64>>> {
    let d = sys.ambient();
    if w.ambient() != d {
        return domain(format!("weight {w} has dimension {}, expected {d}", w.ambient()));
    }
    let r = sys.rank();
    let prefix: Vec<i64> = w
        .0
        .iter()
        .scan(0i64, |acc, &x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let coeffs = match sys.lie_type() {
        LieType::A => {
            if prefix[d - 1] != 0 {
                return Ok(None);
            }
            prefix[..r].to_vec()
        }
        LieType::B => prefix,
        LieType::C => {
            if prefix[r - 1] % 2 != 0 {
                return Ok(None);
            }
            let mut c = prefix[..r - 1].to_vec();
            c.push(prefix[r - 1] / 2);
            c
        }
        LieType::D => {
            let p = prefix[r - 2];
            let last = w.0[r - 1];
            if (p - last) % 2 != 0 {
                return Ok(None);
            }
            let mut c = prefix[..r - 2].to_vec();
            c.push((p - last) / 2);
            c.push((p + last) / 2);
            c
        }
    };
    Ok(Some(coeffs))
}
