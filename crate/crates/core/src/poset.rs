//! The juggling poset: sequences of `JS(a, b, n, m)` ordered by merging a throw
//! `T_{i,j}` with the throw `T_{i+j,k}` of the same ball into `T_{i,j+k}`.

use std::collections::HashMap;
use std::fmt;
use std::fmt::Write as _;

use crate::error::{domain, Result};
use crate::juggling::{enumerate_sequences, JugglingSequence, JugglingState, Throw, ThrowSet};

#[derive(Debug, Clone)]
pub struct JugglingPoset {
    elements: Vec<JugglingSequence>,
    covers: Vec<(usize, usize)>,
    rank: Vec<usize>,
}

/// Integer polynomial, ascending coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPolynomial(pub Vec<i64>);

impl IntPolynomial {
    fn trimmed(mut v: Vec<i64>) -> Self {
        while v.len() > 1 && v.last() == Some(&0) {
            v.pop();
        }
        IntPolynomial(v)
    }

    /// `(q - 1)^k`.
    pub fn q_minus_one_pow(k: usize) -> Self {
        let mut c = vec![1i64];
        for _ in 0..k {
            let mut next = vec![0i64; c.len() + 1];
            for (i, &x) in c.iter().enumerate() {
                next[i + 1] += x;
                next[i] -= x;
            }
            c = next;
        }
        IntPolynomial(c)
    }

    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (k, &c) in self.0.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if out.is_empty() {
                if c < 0 {
                    out.push('-');
                }
            } else {
                let _ = write!(out, " {sign} ");
            }
            let a = c.abs();
            match (k, a) {
                (0, _) => {
                    let _ = write!(out, "{a}");
                }
                (_, 1) => {}
                _ => {
                    let _ = write!(out, "{a}");
                }
            }
            match k {
                0 => {}
                1 => out.push('q'),
                _ => {
                    let _ = write!(out, "q^{k}");
                }
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl JugglingPoset {
    pub fn elements(&self) -> &[JugglingSequence] {
        &self.elements
    }

    /// Pairs `(x, y)` with `x` covered by `y`.
    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn max_rank(&self) -> usize {
        self.rank.iter().copied().max().unwrap_or(0)
    }

    pub fn minimal_elements(&self) -> Vec<usize> {
        let mut has_lower = vec![false; self.len()];
        for &(_, y) in &self.covers {
            has_lower[y] = true;
        }
        (0..self.len()).filter(|&x| !has_lower[x]).collect()
    }

    /// `below[y]` as bitsets: all `z < y`.
    fn strict_down_sets(&self) -> Vec<Vec<u64>> {
        let n = self.len();
        let words = n.div_ceil(64);
        let mut lower: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(x, y) in &self.covers {
            lower[y].push(x);
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&x| self.rank[x]);
        let mut below = vec![vec![0u64; words]; n];
        for &y in &order {
            let mut acc = vec![0u64; words];
            for &x in &lower[y] {
                acc[x / 64] |= 1 << (x % 64);
                for (a, b) in acc.iter_mut().zip(&below[x]) {
                    *a |= *b;
                }
            }
            below[y] = acc;
        }
        below
    }

    /// `mu(0, x)` for the unique minimal element `0`.
    pub fn mobius_from_bottom(&self) -> Result<Vec<i64>> {
        let mins = self.minimal_elements();
        if mins.len() != 1 {
            let names: Vec<String> = mins.iter().map(|&x| self.elements[x].to_string()).collect();
            return domain(format!("poset has {} minimal elements: {}", mins.len(), names.join("; ")));
        }
        let bottom = mins[0];
        let below = self.strict_down_sets();
        let mut order: Vec<usize> = (0..self.len()).collect();
        order.sort_by_key(|&x| self.rank[x]);
        let mut mu = vec![0i64; self.len()];
        for &y in &order {
            if y == bottom {
                mu[y] = 1;
                continue;
            }
            let mut s = 0;
            for (z, m) in mu.iter().enumerate() {
                if below[y][z / 64] >> (z % 64) & 1 == 1 {
                    s += m;
                }
            }
            mu[y] = -s;
        }
        Ok(mu)
    }

    /// `sum_x mu(0, x) q^(rank(P) - rank(x))`.
    pub fn characteristic_polynomial(&self) -> Result<IntPolynomial> {
        let mu = self.mobius_from_bottom()?;
        let top = self.max_rank();
        let mut c = vec![0i64; top + 1];
        for (x, m) in mu.iter().enumerate() {
            c[top - self.rank[x]] += m;
        }
        Ok(IntPolynomial::trimmed(c))
    }

    /// The same elements with every cover reversed. The dual of
    /// `PJS(a, <a_1 + ... + a_n>, n)` is the Tesler order, whose bottom is the
    /// sequence with the fewest throws.
    pub fn dual(&self) -> JugglingPoset {
        let top = self.max_rank();
        let mut covers: Vec<(usize, usize)> = self.covers.iter().map(|&(x, y)| (y, x)).collect();
        covers.sort();
        JugglingPoset {
            elements: self.elements.clone(),
            covers,
            rank: self.rank.iter().map(|r| top - r).collect(),
        }
    }

    /// Cover graph in Graphviz `dot` syntax, edges pointing up.
    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph pjs {\n  rankdir=BT;\n");
        for (i, e) in self.elements.iter().enumerate() {
            let _ = writeln!(s, "  n{i} [label=\"{e}\"];");
        }
        for &(x, y) in &self.covers {
            let _ = writeln!(s, "  n{x} -> n{y};");
        }
        s.push_str("}\n");
        s
    }
}

fn remove_one(v: &mut Vec<Throw>, t: Throw) -> bool {
    match v.iter().position(|&x| x == t) {
        Some(p) => {
            v.remove(p);
            true
        }
        None => false,
    }
}

/// Builds `PJS(a, b, n, m)`.
pub fn build_poset(
    a: &JugglingState,
    b: &JugglingState,
    n: usize,
    capacity: Option<u32>,
) -> Result<JugglingPoset> {
    let elements = enumerate_sequences(a, b, n, capacity, &ThrowSet::All);
    if elements.is_empty() {
        return domain(format!("JS({a}, {b}, {n}) is empty"));
    }
    let index: HashMap<Vec<Throw>, usize> =
        elements.iter().enumerate().map(|(i, s)| (s.throws().to_vec(), i)).collect();
    let mut covers = Vec::new();
    for (x, s) in elements.iter().enumerate() {
        let throws = s.throws();
        let mut seen = Vec::new();
        for (p, &t) in throws.iter().enumerate() {
            if p > 0 && throws[p - 1] == t {
                continue;
            }
            for &u in throws.iter().filter(|u| u.time == t.landing()) {
                if seen.contains(&(t, u)) {
                    continue;
                }
                seen.push((t, u));
                let mut merged = throws.to_vec();
                remove_one(&mut merged, t);
                remove_one(&mut merged, u);
                merged.push(Throw::new(t.time, t.height + u.height));
                merged.sort();
                if let Some(&y) = index.get(&merged) {
                    covers.push((x, y));
                }
            }
        }
    }
    covers.sort();
    covers.dedup();
    let most = elements.iter().map(|s| s.throws().len()).max().unwrap_or(0);
    let rank = elements.iter().map(|s| most - s.throws().len()).collect();
    Ok(JugglingPoset { elements, covers, rank })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(v: &[i64]) -> JugglingState {
        JugglingState::new(v.to_vec())
    }

    #[test]
    fn boolean_lattice() {
        let p = build_poset(&st(&[1]), &st(&[1]), 3, Some(1)).unwrap();
        assert_eq!(p.len(), 4);
        assert_eq!(p.covers().len(), 4);
        assert_eq!(p.characteristic_polynomial().unwrap(), IntPolynomial::q_minus_one_pow(2));
        for &(x, y) in p.covers() {
            assert_eq!(p.rank(y), p.rank(x) + 1);
        }
    }

    #[test]
    fn single_element() {
        let p = build_poset(&st(&[1]), &st(&[1]), 1, None).unwrap();
        assert_eq!(p.len(), 1);
        assert!(p.covers().is_empty());
        assert_eq!(p.characteristic_polynomial().unwrap(), IntPolynomial(vec![1]));
    }

    #[test]
    fn tesler_like() {
        let p = build_poset(&st(&[1, 1, 1]), &st(&[3]), 3, None).unwrap();
        assert_eq!(p.len(), 7);
        assert_eq!(p.covers().len(), 10);
        assert_eq!(p.dual().characteristic_polynomial().unwrap(), IntPolynomial::q_minus_one_pow(3));
        // merge order itself: bottom is the all-height-1 sequence
        assert_eq!(p.characteristic_polynomial().unwrap(), IntPolynomial(vec![-1, 2, -2, 1]));
        assert!(p.to_dot().starts_with("digraph"));
    }

    #[test]
    fn empty_is_error() {
        assert!(build_poset(&st(&[1]), &st(&[2]), 2, None).is_err());
    }

    #[test]
    fn display() {
        assert_eq!(IntPolynomial::q_minus_one_pow(2).to_string(), "q^2 - 2q + 1");
        assert_eq!(IntPolynomial(vec![1]).to_string(), "1");
        assert_eq!(IntPolynomial(vec![-1, 1]).to_string(), "q - 1");
    }
}
