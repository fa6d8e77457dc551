//! Fast formulas checked against the partition and juggling counts:
//! permanent/determinant counts, Lidskii sums, periodic generating functions,
//! closed forms in `Q(sqrt d)`, Catalan products and Ehrhart interpolation.
//!
//! All arithmetic is exact.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Error, Result};
use crate::juggling::{count_sequences, js, JugglingState, ThrowSet};
use crate::kostant::{count_capacity_restricted, kostant, RootSet};
use crate::roots::{LieType, PositiveRoot, RootSystem, Weight};
use crate::{parse_ints, Count};

fn invariant<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvariantViolation(msg.into()))
}

fn to_count(x: &BigInt, what: &str) -> Result<Count> {
    x.to_biguint().map_or_else(|| invariant(format!("{what} is negative: {x}")), Ok)
}

/// Dense square integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntMatrix {
    pub fn new(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return domain("matrix is not square");
        }
        Ok(IntMatrix { rows })
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Ryser's formula.
    pub fn permanent(&self) -> BigInt {
        let n = self.size();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for mask in 1u64..(1u64 << n) {
            let mut prod = BigInt::one();
            for row in &self.rows {
                let s: i64 = (0..n).filter(|&j| mask >> j & 1 == 1).map(|j| row[j]).sum();
                if s == 0 {
                    prod = BigInt::zero();
                    break;
                }
                prod *= s;
            }
            if (n - mask.count_ones() as usize) % 2 == 1 {
                total -= prod;
            } else {
                total += prod;
            }
        }
        total
    }

    /// Fraction-free Gaussian elimination (Bareiss).
    pub fn determinant(&self) -> BigInt {
        let n = self.size();
        if n == 0 {
            return BigInt::one();
        }
        let mut a: Vec<Vec<BigInt>> =
            self.rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = -sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        sign * &a[n - 1][n - 1]
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>2}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn check_type_a(rank: usize, roots: &RootSet) -> Result<()> {
    let sys = RootSystem::new(LieType::A, rank)?;
    if roots.system() != &sys {
        return domain(format!("root set is not a subset of the positive roots of A{rank}"));
    }
    Ok(())
}

fn path_matrix(rank: usize, roots: &RootSet, sub: i64) -> Result<IntMatrix> {
    check_type_a(rank, roots)?;
    let rows = (1..=rank)
        .map(|i| {
            (1..=rank)
                .map(|j| {
                    if j >= i && roots.contains(&PositiveRoot::minus(i, j + 1)) {
                        1
                    } else if j + 1 == i {
                        sub
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect();
    IntMatrix::new(rows)
}

/// `M(r, roots)`: row `i` has a 1 in column `j >= i` when `e_i - e_{j+1}` is
/// allowed, and 1 on the subdiagonal.
pub fn m_matrix(rank: usize, roots: &RootSet) -> Result<IntMatrix> {
    path_matrix(rank, roots, 1)
}

/// `N(r, roots)`: as `M` with -1 on the subdiagonal.
pub fn n_matrix(rank: usize, roots: &RootSet) -> Result<IntMatrix> {
    path_matrix(rank, roots, -1)
}

/// `K_roots(e_1 - e_{r+1})` as `perm M = det N`.
pub fn perm_det_count(rank: usize, roots: &RootSet) -> Result<Count> {
    let p = m_matrix(rank, roots)?.permanent();
    let d = n_matrix(rank, roots)?.determinant();
    if p != d {
        return invariant(format!("permanent {p} differs from determinant {d}"));
    }
    to_count(&p, "permanent")
}

/// Generalized binomial `C(n, k)` for any integer `n` and `k >= 0`.
pub fn binomial(n: &BigInt, k: u64) -> BigInt {
    let mut acc = BigInt::one();
    for t in 0..k {
        acc = acc * (n - BigInt::from(t)) / BigInt::from(t + 1);
    }
    acc
}

/// Multiset coefficient `C(n + k - 1, k)`.
pub fn multichoose(n: &BigInt, k: u64) -> BigInt {
    binomial(&(n + BigInt::from(k) - 1), k)
}

/// Weak compositions of `total` into `parts` parts whose partial sums dominate
/// those of `(parts, parts-1, ..., 1)`.
fn dominating_compositions(total: u64, parts: usize) -> Vec<Vec<u64>> {
    fn go(idx: usize, left: u64, prefix: u64, parts: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if idx == parts {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // (parts, ..., 1) partial sum after idx+1 entries
        let need: u64 = (0..=idx).map(|k| (parts - k) as u64).sum();
        for c in 0..=left {
            if prefix + c < need {
                continue;
            }
            cur.push(c);
            go(idx + 1, left - c, prefix + c, parts, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, total, 0, parts, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LidskiiVariant {
    Binomial,
    Multiset,
}

/// `K_{A_r}(mu)` by a Lidskii-type sum over weak compositions `j` of `C(r,2)`
/// dominating `(r-1, ..., 1)`, each term weighted by
/// `js(<j_1-r+1, ..., j_{r-2}-2>, <1-j_{r-1}>, r-2)`.
///
/// The binomial variant uses `prod C(mu_i + r - i, j_i)`, the multiset variant
/// `prod multichoose(mu_i + 2 - i, j_i)`.
pub fn lidskii_count(mu: &Weight, variant: LidskiiVariant) -> Result<Count> {
    let d = mu.ambient();
    if d < 3 {
        return domain(format!("weight {mu} needs rank at least 2"));
    }
    if mu.sum() != 0 {
        return domain(format!("weight {mu} has coordinate sum {}, expected 0", mu.sum()));
    }
    let r = d - 1;
    if let Some(i) = (0..r).find(|&i| mu.0[i] < 0) {
        return domain(format!("coordinate {} of {mu} is negative", i + 1));
    }
    let total = (r * (r - 1) / 2) as u64;
    let mut sum = BigInt::zero();
    for j in dominating_compositions(total, r - 1) {
        let mut coeff = BigInt::one();
        for (idx, &ji) in j.iter().enumerate() {
            let i = idx as i64 + 1;
            let f = match variant {
                LidskiiVariant::Binomial => binomial(&BigInt::from(mu.0[idx] + r as i64 - i), ji),
                LidskiiVariant::Multiset => multichoose(&BigInt::from(mu.0[idx] + 2 - i), ji),
            };
            coeff *= f;
            if coeff.is_zero() {
                break;
            }
        }
        if coeff.is_zero() {
            continue;
        }
        let a: Vec<i64> = (0..r - 2).map(|k| j[k] as i64 - (r - 1 - k) as i64).collect();
        let b = vec![1 - j[r - 2] as i64];
        coeff *= BigInt::from(js(&a, &b, r - 2));
        sum += coeff;
    }
    to_count(&sum, "Lidskii sum")
}

/// Generating function of periodic juggling counts `js(s, s, n, m)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GfRow {
    pub state: Vec<i64>,
    pub capacity: u32,
    pub numerator: Vec<i64>,
    pub denominator: Vec<i64>,
}

impl GfRow {
    pub fn id(&self) -> String {
        let s: Vec<String> = self.state.iter().map(|x| x.to_string()).collect();
        format!("{}|{}", s.join(","), self.capacity)
    }
}

pub fn table_rows() -> Vec<GfRow> {
    let row = |state: &[i64], m: u32, num: &[i64], den: &[i64]| GfRow {
        state: state.to_vec(),
        capacity: m,
        numerator: num.to_vec(),
        denominator: den.to_vec(),
    };
    vec![
        row(&[2], 2, &[0, 1, -2], &[1, -5, 5]),
        row(&[1, 1], 2, &[0, 1, -2, 1], &[1, -5, 5]),
        row(&[2, 1], 2, &[0, 1, -4, 3], &[1, -8, 13]),
        row(&[1, 1, 1], 2, &[0, 1, -5, 7], &[1, -8, 13]),
        row(&[2, 2], 2, &[0, 1, -11, 33, -27], &[1, -14, 54, -57]),
        row(&[3], 3, &[0, 1, -6, 7], &[1, -10, 27, -20]),
        row(&[2, 1], 3, &[0, 1, -5, 7, -3], &[1, -10, 27, -20]),
    ]
}

/// Looks a row up by `state|m`, e.g. `2,1|3`.
pub fn find_row(id: &str) -> Result<GfRow> {
    let (s, m) = id
        .split_once('|')
        .ok_or_else(|| Error::Parse(format!("bad row `{id}`, expected state|capacity")))?;
    let state = JugglingState::new(parse_ints(s)?);
    let m: u32 = m.trim().parse().map_err(|_| Error::Parse(format!("bad capacity in `{id}`")))?;
    table_rows()
        .into_iter()
        .find(|r| r.state == state.entries() && r.capacity == m)
        .map_or_else(|| domain(format!("no generating function for row `{id}`")), Ok)
}

/// Coefficients of `x^1 .. x^upto`.
pub fn gf_coefficients(row: &GfRow, upto: usize) -> Result<Vec<Count>> {
    if upto == 0 {
        return domain("need at least one coefficient");
    }
    let mut a: Vec<BigInt> = Vec::with_capacity(upto + 1);
    for n in 0..=upto {
        let mut v = BigInt::from(row.numerator.get(n).copied().unwrap_or(0));
        for (k, &d) in row.denominator.iter().enumerate().skip(1) {
            if k <= n {
                v -= &a[n - k] * d;
            }
        }
        a.push(v);
    }
    a[1..].iter().map(|x| to_count(x, "coefficient")).collect()
}

/// `js(s, s, n, m)` for `n = 1..=upto`.
pub fn gf_direct_counts(row: &GfRow, upto: usize) -> Vec<Count> {
    let s = JugglingState::new(row.state.clone());
    (1..=upto)
        .map(|n| count_sequences(&s, &s, n, Some(row.capacity), &ThrowSet::All))
        .collect()
}

/// `x + y sqrt(d)` with rational parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd {
    pub rational: BigRational,
    pub irrational: BigRational,
    pub radicand: i64,
}

impl Surd {
    pub fn new(rational: BigRational, irrational: BigRational, radicand: i64) -> Self {
        Surd { rational, irrational, radicand }
    }

    pub fn int(a: i64, b: i64, radicand: i64) -> Self {
        Surd::new(BigRational::from_integer(a.into()), BigRational::from_integer(b.into()), radicand)
    }

    pub fn pow(&self, e: u32) -> Surd {
        let mut acc = Surd::int(1, 0, self.radicand);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, q: &BigRational) -> Surd {
        Surd::new(&self.rational * q, &self.irrational * q, self.radicand)
    }

    /// Divides by `y sqrt(d)`.
    pub fn div_sqrt(&self, y: &BigRational) -> Surd {
        let d = BigRational::from_integer(self.radicand.into());
        Surd::new(&self.irrational / y, &self.rational / (y * d), self.radicand)
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        self.irrational.is_zero().then_some(&self.rational)
    }
}

impl Mul for &Surd {
    type Output = Surd;

    fn mul(self, o: &Surd) -> Surd {
        let d = BigRational::from_integer(self.radicand.into());
        Surd::new(
            &self.rational * &o.rational + &self.irrational * &o.irrational * d,
            &self.rational * &o.irrational + &self.irrational * &o.rational,
            self.radicand,
        )
    }
}

impl Add for &Surd {
    type Output = Surd;

    fn add(self, o: &Surd) -> Surd {
        Surd::new(&self.rational + &o.rational, &self.irrational + &o.irrational, self.radicand)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ClosedForm {
    /// `K_{A_r}(2 alpha~)`, r >= 2.
    C45,
    /// Capacity-2 count for `<1,1>` over `n = r-1` steps, r >= 2.
    C46,
    /// Capacity-2 count for `<2,1>` over `n = r-1` steps, r >= 3.
    C47,
    /// Capacity-2 count for `<1,1,1>` over `n = r-2` steps, r >= 5.
    C48,
}

impl ClosedForm {
    pub const ALL: [ClosedForm; 4] = [ClosedForm::C45, ClosedForm::C46, ClosedForm::C47, ClosedForm::C48];

    pub fn min_rank(self) -> usize {
        match self {
            ClosedForm::C45 | ClosedForm::C46 => 2,
            ClosedForm::C47 => 3,
            ClosedForm::C48 => 5,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            ClosedForm::C45 => "c45",
            ClosedForm::C46 => "c46",
            ClosedForm::C47 => "c47",
            ClosedForm::C48 => "c48",
        }
    }

    /// `(p, q)` with `a_r = p a_{r-1} - q a_{r-2}`.
    pub fn recurrence(self) -> (i64, i64) {
        match self {
            ClosedForm::C45 | ClosedForm::C46 => (5, 5),
            ClosedForm::C47 | ClosedForm::C48 => (8, 13),
        }
    }

    /// Exact value of the surd expression at `r`.
    pub fn evaluate(self, r: usize) -> Result<BigRational> {
        if r < self.min_rank() {
            return domain(format!("{} needs r >= {}, got {r}", self.name(), self.min_rank()));
        }
        let q = |n: i64, d: i64| BigRational::new(n.into(), d.into());
        let pow2 = |e: usize| BigRational::from_integer(BigInt::one() << e);
        let r32 = r as u32;
        let v = match self {
            ClosedForm::C45 => {
                let s = &Surd::int(5, -1, 5).pow(r32) + &Surd::int(5, 1, 5).pow(r32);
                s.scale(&(q(1, 5) / pow2(r)))
            }
            ClosedForm::C46 => {
                let lo = &Surd::int(-3, 1, 5) * &Surd::int(5, -1, 5).pow(r32 - 1);
                let hi = &Surd::int(3, 1, 5) * &Surd::int(5, 1, 5).pow(r32 - 1);
                (&lo + &hi).div_sqrt(&(q(5, 1) * pow2(r)))
            }
            ClosedForm::C47 => {
                let lo = &Surd::int(-9, 14, 3) * &Surd::int(4, -1, 3).pow(r32 - 1);
                let hi = &Surd::int(9, 14, 3) * &Surd::int(4, 1, 3).pow(r32 - 1);
                (&lo + &hi).div_sqrt(&q(169, 1))
            }
            ClosedForm::C48 => {
                let lo = &Surd::int(9, -14, 3) * &Surd::int(4, -1, 3).pow(r32 - 2);
                let hi = &Surd::int(9, 14, 3) * &Surd::int(4, 1, 3).pow(r32 - 2);
                (&lo + &hi).scale(&q(1, 338))
            }
        };
        match v.as_rational() {
            Some(x) => Ok(x.clone()),
            None => invariant(format!("{} at r = {r} is irrational", self.name())),
        }
    }

    /// The count the formula describes, computed by the partition oracle.
    pub fn oracle(self, r: usize) -> Result<Count> {
        if r < self.min_rank() {
            return domain(format!("{} needs r >= {}, got {r}", self.name(), self.min_rank()));
        }
        let sys = RootSystem::new(LieType::A, r)?;
        let d = r + 1;
        // (initial state, last time allowed to throw)
        let (a, n): (Vec<i64>, usize) = match self {
            ClosedForm::C45 => return kostant(sys, &sys.highest_root().scaled(2)),
            ClosedForm::C46 => (vec![1, 1], r - 1),
            ClosedForm::C47 => (vec![2, 1], r - 1),
            ClosedForm::C48 => (vec![1, 1, 1], r - 2),
        };
        let mut target = vec![0i64; d];
        for (k, &x) in a.iter().enumerate() {
            target[k] += x;
            target[n + k] -= x;
        }
        let lam = RootSet::filtered(sys, |root| root.i <= n);
        count_capacity_restricted(&Weight(target), &lam, &JugglingState::new(a), 2)
    }
}

impl FromStr for ClosedForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        ClosedForm::ALL
            .into_iter()
            .find(|c| c.name() == s.trim().to_ascii_lowercase())
            .ok_or_else(|| Error::Parse(format!("unknown closed form `{s}` (expected c45, c46, c47 or c48)")))
    }
}

impl fmt::Display for ClosedForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Oracle comparisons are made up to this rank.
pub const CLOSED_FORM_ORACLE_RANK: usize = 6;

/// Evaluates the closed form exactly and, for `r <= 6`, compares it with the
/// oracle.
pub fn closed_form_check(which: ClosedForm, r: usize) -> Result<Count> {
    let v = which.evaluate(r)?;
    if !v.is_integer() || v.is_negative() {
        let tail = if r <= CLOSED_FORM_ORACLE_RANK {
            format!(", the oracle gives {}", which.oracle(r)?)
        } else {
            String::new()
        };
        return invariant(format!("{which} at r = {r} evaluates to {v}{tail}"));
    }
    let value = to_count(&v.to_integer(), "closed form")?;
    if r <= CLOSED_FORM_ORACLE_RANK {
        let o = which.oracle(r)?;
        if o != value {
            return invariant(format!("{which} at r = {r} gives {value}, the oracle gives {o}"));
        }
    }
    Ok(value)
}

/// Checks `a_r = p a_{r-1} - q a_{r-2}` on the exact values for
/// `min_rank + 2 ..= upto`.
pub fn closed_form_recurrence_holds(which: ClosedForm, upto: usize) -> Result<bool> {
    let lo = which.min_rank();
    let vals: Vec<BigRational> = (lo..=upto).map(|r| which.evaluate(r)).collect::<Result<_>>()?;
    let (p, q) = which.recurrence();
    let p = BigRational::from_integer(p.into());
    let q = BigRational::from_integer(q.into());
    Ok(vals.windows(3).all(|w| w[2] == &p * &w[1] - &q * &w[0]))
}

pub fn catalan(n: u64) -> Count {
    let c = binomial(&BigInt::from(2 * n), n) / BigInt::from(n + 1);
    c.to_biguint().expect("nonnegative")
}

/// `js(<1, 2, ..., r-2>, <C(r-1, 2)>, r-2)`, checked against `Cat_1 ... Cat_{r-2}`.
pub fn catalan_product_check(r: usize) -> Result<Count> {
    if r < 3 {
        return domain(format!("need r >= 3, got {r}"));
    }
    let a: Vec<i64> = (1..=(r as i64 - 2)).collect();
    let b = vec![((r - 1) * (r - 2) / 2) as i64];
    let count = js(&a, &b, r - 2);
    let product: Count = (1..=(r as u64 - 2)).map(catalan).product();
    if count != product {
        return invariant(format!("juggling count {count} differs from the Catalan product {product}"));
    }
    Ok(count)
}

/// Polynomial with exact rational coefficients, ascending degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalPolynomial(Vec<BigRational>);

impl RationalPolynomial {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        RationalPolynomial(c)
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.0
    }

    /// Degree, with the zero polynomial reported as 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn leading(&self) -> BigRational {
        self.0.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.0.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    /// Lagrange interpolation through `(x_k, y_k)` with distinct `x_k`.
    pub fn interpolate(points: &[(BigRational, BigRational)]) -> Self {
        let n = points.len();
        let mut out = vec![BigRational::zero(); n.max(1)];
        for (k, (xk, yk)) in points.iter().enumerate() {
            let mut basis = vec![BigRational::one()];
            let mut denom = BigRational::one();
            for (m, (xm, _)) in points.iter().enumerate() {
                if m == k {
                    continue;
                }
                let mut next = vec![BigRational::zero(); basis.len() + 1];
                for (i, c) in basis.iter().enumerate() {
                    next[i + 1] += c;
                    next[i] -= c * xm;
                }
                basis = next;
                denom *= xk - xm;
            }
            let scale = yk / denom;
            for (i, c) in basis.iter().enumerate() {
                out[i] += c * &scale;
            }
        }
        RationalPolynomial::new(out)
    }
}

impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let a = c.abs();
            let coeff = if a.is_one() && k > 0 { String::new() } else if k > 0 { format!("{a} ") } else { a.to_string() };
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            parts.push((neg, format!("{coeff}{var}")));
        }
        if parts.is_empty() {
            return f.write_str("0");
        }
        let mut s = String::new();
        for (idx, (neg, body)) in parts.into_iter().enumerate() {
            match (idx, neg) {
                (0, true) => s.push('-'),
                (0, false) => {}
                (_, true) => s.push_str(" - "),
                (_, false) => s.push_str(" + "),
            }
            s.push_str(&body);
        }
        f.write_str(&s)
    }
}

/// Result of fitting `t -> K_{A_r}(t mu)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EhrhartFit {
    pub polynomial: RationalPolynomial,
    /// `(t, count)` used for interpolation.
    pub samples: Vec<(u64, Count)>,
    /// `(t, count)` predicted and confirmed.
    pub checked: Vec<(u64, Count)>,
}

/// Interpolates `js(<t mu_1, ..., t mu_r>, <t (mu_1 + ... + mu_r)>, r)` at
/// `t = 1..=C(r,2)+1`, then confirms the next `extra` values.
pub fn ehrhart_fit(mu: &Weight, extra: usize) -> Result<EhrhartFit> {
    let d = mu.ambient();
    if d < 2 {
        return domain(format!("weight {mu} needs at least two coordinates"));
    }
    if mu.sum() != 0 {
        return domain(format!("weight {mu} has coordinate sum {}, expected 0", mu.sum()));
    }
    let r = d - 1;
    if let Some(i) = (0..r).find(|&i| mu.0[i] < 0) {
        return domain(format!("coordinate {} of {mu} is negative", i + 1));
    }
    let dim = r * (r - 1) / 2;
    let value = |t: u64| -> Count {
        let a: Vec<i64> = mu.0[..r].iter().map(|x| x * t as i64).collect();
        js(&a, &[-mu.0[r] * t as i64], r)
    };
    let samples: Vec<(u64, Count)> = (1..=dim as u64 + 1).map(|t| (t, value(t))).collect();
    let points: Vec<(BigRational, BigRational)> = samples
        .iter()
        .map(|(t, c)| (BigRational::from_integer((*t).into()), BigRational::from_integer(BigInt::from(c.clone()))))
        .collect();
    let polynomial = RationalPolynomial::interpolate(&points);
    let mut checked = Vec::new();
    for t in dim as u64 + 2..=dim as u64 + 1 + extra as u64 {
        let c = value(t);
        let p = polynomial.eval(&BigRational::from_integer(t.into()));
        if p != BigRational::from_integer(BigInt::from(c.clone())) {
            return invariant(format!("interpolant {polynomial} predicts {p} at t = {t}, actual {c}"));
        }
        checked.push((t, c));
    }
    Ok(EhrhartFit { polynomial, samples, checked })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn a_sys(r: usize) -> RootSystem {
        RootSystem::new(LieType::A, r).unwrap()
    }

    #[test]
    fn printed_matrices() {
        let m = IntMatrix::new(vec![vec![1, 1, 0, 0], vec![1, 1, 1, 0], vec![0, 1, 1, 1], vec![0, 0, 1, 1]]).unwrap();
        let n = IntMatrix::new(vec![vec![1, 1, 0, 0], vec![-1, 1, 1, 0], vec![0, -1, 1, 1], vec![0, 0, -1, 1]]).unwrap();
        assert_eq!(m.permanent(), BigInt::from(5));
        assert_eq!(n.determinant(), BigInt::from(5));
        let short = RootSet::filtered(a_sys(4), |r| r.j - r.i <= 2);
        assert_eq!(m_matrix(4, &short).unwrap(), m);
        assert_eq!(n_matrix(4, &short).unwrap(), n);
        assert_eq!(perm_det_count(4, &short).unwrap(), big(5));
        let short3 = RootSet::filtered(a_sys(3), |r| r.j - r.i <= 2);
        assert_eq!(perm_det_count(3, &short3).unwrap(), big(3));
    }

    #[test]
    fn perm_det_edges() {
        let empty = RootSet::new(a_sys(3), []).unwrap();
        assert_eq!(perm_det_count(3, &empty).unwrap(), big(0));
        for r in 1..=8 {
            assert_eq!(perm_det_count(r, &RootSet::full(a_sys(r))).unwrap(), big(1 << (r - 1)));
        }
    }

    #[test]
    fn determinant_with_pivoting() {
        let m = IntMatrix::new(vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(m.determinant(), BigInt::from(-1));
        assert_eq!(m.permanent(), BigInt::from(1));
        let s = IntMatrix::new(vec![vec![2, 3, 1], vec![4, 1, 5], vec![7, 2, 2]]).unwrap();
        assert_eq!(s.determinant(), BigInt::from(2 * (2 - 10) - 3 * (8 - 35) + (8 - 7)));
    }

    #[test]
    fn generalized_binomials() {
        assert_eq!(binomial(&BigInt::from(5), 2), BigInt::from(10));
        assert_eq!(binomial(&BigInt::from(-2), 3), BigInt::from(-4));
        assert_eq!(binomial(&BigInt::from(0), 1), BigInt::from(0));
        assert_eq!(multichoose(&BigInt::from(2), 3), BigInt::from(4));
        assert_eq!(multichoose(&BigInt::from(0), 0), BigInt::from(1));
        assert_eq!(multichoose(&BigInt::from(-1), 2), BigInt::from(0));
    }

    #[test]
    fn lidskii_small() {
        for v in [LidskiiVariant::Binomial, LidskiiVariant::Multiset] {
            assert_eq!(lidskii_count(&Weight(vec![1, 0, 0, -1]), v).unwrap(), big(4));
            assert_eq!(lidskii_count(&Weight(vec![1, 1, 1, -3]), v).unwrap(), big(7));
            assert_eq!(lidskii_count(&Weight(vec![0, 0, 0]), v).unwrap(), big(1));
        }
        assert!(lidskii_count(&Weight(vec![-1, 1, 0]), LidskiiVariant::Binomial).is_err());
    }

    #[test]
    fn gf_rows() {
        let r = find_row("2|2").unwrap();
        assert_eq!(gf_coefficients(&r, 4).unwrap(), vec![big(1), big(3), big(10), big(35)]);
        let r = find_row("1,1|2").unwrap();
        assert_eq!(gf_coefficients(&r, 4).unwrap(), vec![big(1), big(3), big(11), big(40)]);
        let r = find_row("3|3").unwrap();
        assert_eq!(gf_coefficients(&r, 1).unwrap(), vec![big(1)]);
        assert!(find_row("4|4").is_err());
        for row in table_rows() {
            assert_eq!(gf_coefficients(&row, 5).unwrap(), gf_direct_counts(&row, 5), "{}", row.id());
        }
    }

    #[test]
    fn closed_forms() {
        assert_eq!(closed_form_check(ClosedForm::C45, 2).unwrap(), big(3));
        assert_eq!(closed_form_check(ClosedForm::C45, 3).unwrap(), big(10));
        assert_eq!(closed_form_check(ClosedForm::C46, 3).unwrap(), big(3));
        assert_eq!(closed_form_check(ClosedForm::C47, 3).unwrap(), big(4));
        assert_eq!(closed_form_check(ClosedForm::C48, 5).unwrap(), big(18));
        assert!(closed_form_check(ClosedForm::C48, 4).is_err());
        for c in ClosedForm::ALL {
            assert!(closed_form_recurrence_holds(c, 12).unwrap());
        }
    }

    #[test]
    fn c46_smallest_rank() {
        assert_eq!(ClosedForm::C46.evaluate(2).unwrap(), BigRational::new(4.into(), 5.into()));
        assert_eq!(ClosedForm::C46.oracle(2).unwrap(), big(1));
        assert!(matches!(closed_form_check(ClosedForm::C46, 2), Err(Error::InvariantViolation(_))));
    }

    #[test]
    fn catalan_products() {
        assert_eq!(catalan_product_check(3).unwrap(), big(1));
        assert_eq!(catalan_product_check(4).unwrap(), big(2));
        assert_eq!(catalan_product_check(6).unwrap(), big(140));
        assert!(catalan_product_check(2).is_err());
    }

    #[test]
    fn ehrhart() {
        let p = ehrhart_fit(&Weight(vec![1, -1]), 2).unwrap().polynomial;
        assert_eq!(p.to_string(), "1");
        let p = ehrhart_fit(&Weight(vec![1, 0, -1]), 2).unwrap().polynomial;
        assert_eq!(p.to_string(), "t + 1");
        let p = ehrhart_fit(&Weight(vec![1, 1, -2]), 2).unwrap().polynomial;
        assert_eq!(p.to_string(), "t + 1");
        let fit = ehrhart_fit(&Weight(vec![1, 1, 1, -3]), 2).unwrap();
        assert_eq!(fit.checked.len(), 2);
        assert!(fit.polynomial.degree() <= 3);
    }

    #[test]
    fn interpolation_roundtrip() {
        let q = |n: i64| BigRational::from_integer(n.into());
        let pts: Vec<_> = (0..4).map(|x| (q(x), q(x * x * x - 2 * x + 7))).collect();
        let p = RationalPolynomial::interpolate(&pts);
        assert_eq!(p.coefficients(), &[q(7), q(-2), q(0), q(1)]);
        assert_eq!(p.eval(&q(5)), q(125 - 10 + 7));
    }
}
