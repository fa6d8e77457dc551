//! The correspondence between type-A root partitions and juggling sequences:
//! the root `e_i - e_{i+j}` is the throw `T_{i,j}`.

use std::collections::BTreeSet;

use num_bigint::BigUint;

use crate::error::{domain, Result};
use crate::juggling::{JugglingProblem, JugglingSequence, JugglingState, Throw, ThrowSet};
use crate::kostant::{
    count_capacity_restricted, count_partitions, enumerate_capacity_restricted, enumerate_partitions,
    RootPartition, RootSet,
};
use crate::roots::{LieType, PositiveRoot, RootKind, RootSystem, Weight};
use crate::Count;

pub fn root_of_throw(t: Throw) -> PositiveRoot {
    PositiveRoot::minus(t.time, t.time + t.height)
}

pub fn throw_of_root(beta: PositiveRoot) -> Result<Throw> {
    if beta.kind != RootKind::EMinus || beta.i == 0 || beta.i >= beta.j {
        return domain(format!("root {beta} is not of the form e_i - e_j with i < j"));
    }
    Ok(Throw::new(beta.i, beta.j - beta.i))
}

/// Throw set made of the images of a type-A root set.
pub fn throws_of_roots(roots: &RootSet) -> Result<ThrowSet> {
    let throws = roots.roots().iter().map(|r| throw_of_root(*r)).collect::<Result<Vec<_>>>()?;
    Ok(ThrowSet::explicit(throws))
}

/// The juggling sequence of length `n` starting at `a` whose throws are the
/// roots of `p`. The state at time `i` holds at height `k` the value
/// `a_{i+k}` plus the number of roots `e_l - e_{i+k}` of `p` with `l <= i`.
pub fn gamma(p: &RootPartition, a: &JugglingState, n: usize) -> Result<JugglingSequence> {
    let mut dim = a.height();
    for (root, _) in p.entries() {
        if root.kind != RootKind::EMinus {
            return domain(format!("root {root} has no throw"));
        }
        if root.i > n {
            return domain(format!("root {root} is a throw at time {} > {n}", root.i));
        }
        dim = dim.max(root.j);
    }
    // landed[c][i]: number of roots e_l - e_c with l <= i
    let mut landed = vec![vec![0i64; n + 1]; dim + 1];
    let mut thrown = vec![0i64; n + 1];
    for (root, m) in p.entries() {
        let m = *m as i64;
        thrown[root.i] += m;
        for t in root.i..=n {
            landed[root.j][t] += m;
        }
    }
    let mut states = Vec::with_capacity(n + 1);
    for i in 0..=n {
        let entries: Vec<i64> = (i + 1..=dim).map(|c| a.get(c) + landed[c][i]).collect();
        states.push(JugglingState::new(entries));
    }
    for i in 1..=n {
        let hand = states[i - 1].get(1);
        if hand != thrown[i] {
            return domain(format!(
                "partition throws {} balls at time {i}, but {} are in hand",
                thrown[i], hand
            ));
        }
    }
    JugglingSequence::from_states(states)
}

/// The multiset of roots of the throws of `seq`.
pub fn gamma_inverse(seq: &JugglingSequence) -> RootPartition {
    RootPartition::from_roots(seq.throws().iter().map(|t| root_of_throw(*t)))
}

/// Outcome of comparing partitions of a type-A weight with juggling sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CorrespondenceReport {
    pub weight: Weight,
    pub initial: JugglingState,
    pub terminal: JugglingState,
    pub length: usize,
    pub capacity: Option<u32>,
    /// Counted by the partition oracle.
    pub partitions: Count,
    /// Counted by the juggling DP.
    pub sequences: Count,
    pub enumerated_partitions: usize,
    pub enumerated_sequences: usize,
    pub roundtrip: bool,
    pub injective: bool,
    pub image_is_all: bool,
    pub first_mismatch: Option<String>,
}

impl CorrespondenceReport {
    pub fn passed(&self) -> bool {
        self.partitions == self.sequences
            && BigUint::from(self.enumerated_partitions) == self.partitions
            && BigUint::from(self.enumerated_sequences) == self.sequences
            && self.roundtrip
            && self.injective
            && self.image_is_all
            && self.first_mismatch.is_none()
    }
}

/// Checks that `gamma` maps the partitions of `mu` (over `roots`, default all
/// of the positive type-A roots, optionally capacity restricted) one-to-one
/// onto `JS(<mu_1..mu_r>, <mu_1+..+mu_r>, r)` with the matching throws.
pub fn verify_correspondence(
    mu: &Weight,
    roots: Option<&RootSet>,
    capacity: Option<u32>,
) -> Result<CorrespondenceReport> {
    if mu.sum() != 0 {
        return domain(format!("weight {mu} has coordinate sum {}, expected 0", mu.sum()));
    }
    if mu.ambient() < 2 {
        return domain(format!("weight {mu} needs at least two coordinates"));
    }
    let r = mu.ambient() - 1;
    let system = RootSystem::new(LieType::A, r)?;
    let full = RootSet::full(system);
    let lam = roots.unwrap_or(&full);
    if lam.system() != &system {
        return domain("root set does not belong to the type-A system of the weight");
    }
    let a = JugglingState::new(mu.0[..r].to_vec());
    let b = JugglingState::new(vec![-mu.0[r]]);
    let throws = throws_of_roots(lam)?;
    let problem = JugglingProblem::new(a.clone(), b.clone(), r)
        .with_capacity(capacity)
        .with_throws(throws);

    let (partitions, parts) = match capacity {
        None => (count_partitions(mu, lam)?, enumerate_partitions(mu, lam)?),
        Some(m) => (
            count_capacity_restricted(mu, lam, &a, m)?,
            enumerate_capacity_restricted(mu, lam, &a, m)?,
        ),
    };
    let sequences = problem.count();
    let seqs = problem.enumerate();
    let seq_set: BTreeSet<&JugglingSequence> = seqs.iter().collect();

    let mut first_mismatch = None;
    let mut roundtrip = true;
    let mut image = BTreeSet::new();
    for p in &parts {
        match gamma(p, &a, r) {
            Ok(s) => {
                if gamma_inverse(&s) != *p {
                    roundtrip = false;
                    first_mismatch.get_or_insert_with(|| format!("{p} does not survive the roundtrip"));
                }
                if !seq_set.contains(&s) {
                    first_mismatch.get_or_insert_with(|| format!("{p} maps to {s}, which is not enumerated"));
                }
                image.insert(s);
            }
            Err(e) => {
                roundtrip = false;
                first_mismatch.get_or_insert_with(|| format!("{p}: {e}"));
            }
        }
    }
    let injective = image.len() == parts.len();
    let image_is_all = image.len() == seqs.len() && image.iter().all(|s| seq_set.contains(s));
    if !image_is_all && first_mismatch.is_none() {
        if let Some(s) = seqs.iter().find(|s| !image.contains(*s)) {
            first_mismatch = Some(format!("{} (from {s}) has no preimage", gamma_inverse(s)));
        }
    }
    Ok(CorrespondenceReport {
        weight: mu.clone(),
        initial: a,
        terminal: b,
        length: r,
        capacity,
        partitions,
        sequences,
        enumerated_partitions: parts.len(),
        enumerated_sequences: seqs.len(),
        roundtrip,
        injective,
        image_is_all,
        first_mismatch,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::juggling::js;
    use crate::roots::weight_from_simple;

    fn st(v: &[i64]) -> JugglingState {
        JugglingState::new(v.to_vec())
    }

    #[test]
    fn throw_root_dictionary() {
        assert_eq!(root_of_throw(Throw::new(2, 3)), PositiveRoot::minus(2, 5));
        assert_eq!(throw_of_root(PositiveRoot::minus(1, 2)).unwrap(), Throw::new(1, 1));
        assert!(throw_of_root(PositiveRoot::plus(1, 2)).is_err());
        for i in 1..=6 {
            for j in 1..=7 - i {
                let t = Throw::new(i, j);
                assert_eq!(throw_of_root(root_of_throw(t)).unwrap(), t);
            }
        }
    }

    #[test]
    fn gamma_example() {
        let p = RootPartition::from_roots([
            PositiveRoot::minus(1, 2),
            PositiveRoot::minus(2, 3),
            PositiveRoot::minus(2, 3),
            PositiveRoot::minus(3, 4),
        ]);
        let s = gamma(&p, &st(&[1, 1, -1]), 3).unwrap();
        assert_eq!(s.states(), &[st(&[1, 1, -1]), st(&[2, -1]), st(&[1]), st(&[1])]);
        assert_eq!(gamma_inverse(&s), p);
    }

    #[test]
    fn gamma_empty() {
        let s = gamma(&RootPartition::empty(), &JugglingState::empty(), 4).unwrap();
        assert!(s.states().iter().all(JugglingState::is_empty));
        assert_eq!(s.len(), 4);
        assert!(gamma_inverse(&s).is_empty());
    }

    #[test]
    fn gamma_rejects_bad_input() {
        let late = RootPartition::from_roots([PositiveRoot::minus(3, 4)]);
        assert!(gamma(&late, &st(&[0, 0, 1]), 2).is_err());
        let inconsistent = RootPartition::from_roots([PositiveRoot::minus(1, 2)]);
        assert!(gamma(&inconsistent, &st(&[2]), 2).is_err());
        let plus = RootPartition::from_roots([PositiveRoot::plus(1, 2)]);
        assert!(gamma(&plus, &st(&[1]), 2).is_err());
    }

    #[test]
    fn five_partitions_five_sequences() {
        let sys = RootSystem::new(LieType::A, 3).unwrap();
        let mu = weight_from_simple(&sys, &[1, 2, 1]).unwrap();
        let rep = verify_correspondence(&mu, None, None).unwrap();
        assert!(rep.passed(), "{rep:?}");
        assert_eq!(rep.partitions, BigUint::from(5u32));
        assert_eq!(rep.initial, st(&[1, 1, -1]));
        assert_eq!(rep.terminal, st(&[1]));
    }

    #[test]
    fn inverse_reads_off_throws() {
        let s = JugglingSequence::from_states(vec![st(&[1, 1]), st(&[2]), st(&[0, 1, 1]), st(&[1, 1])]).unwrap();
        let p = gamma_inverse(&s);
        assert_eq!(
            p,
            RootPartition::from_roots([PositiveRoot::minus(1, 2), PositiveRoot::minus(2, 4), PositiveRoot::minus(2, 5)])
        );
    }

    #[test]
    fn zero_and_multiples_of_highest_root() {
        let rep = verify_correspondence(&Weight(vec![0, 0, 0]), None, None).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.partitions, BigUint::from(1u32));
        let w = Weight(vec![3, 0, 0, 0, -3]);
        let rep = verify_correspondence(&w, None, None).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.sequences, js(&[3], &[3], 4));
        assert!(verify_correspondence(&Weight(vec![1, 0]), None, None).is_err());
    }

    #[test]
    fn capacity_variant() {
        let w = Weight(vec![2, 1, 0, -3]);
        for m in 1..=3 {
            let rep = verify_correspondence(&w, None, Some(m)).unwrap();
            assert!(rep.passed(), "{rep:?}");
        }
    }
}
