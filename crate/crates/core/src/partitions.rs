//! Integer partitions and the Young-lattice combinatorics built on them:
//! covers, border strips, contents, degree vectors and path counts.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("malformed partition: {0}")]
    MalformedPartition(String),
    #[error("the empty partition has no removable box")]
    EmptyPartition,
    #[error("partition of size {size} exceeds the oracle bound {bound}")]
    OracleBoundExceeded { size: usize, bound: usize },
    #[error("entries {0:?} are not strictly decreasing")]
    NotStrictlyDecreasing(Vec<usize>),
}

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// stripped on construction, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Accepts weakly decreasing parts; zeros are only allowed at the end.
    pub fn new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if let Some(w) = parts.windows(2).find(|w| w[0] < w[1]) {
            return Err(PartitionError::MalformedPartition(format!(
                "parts must be weakly decreasing, found {} before {}",
                w[0], w[1]
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// `m` rows of length `n`.
    pub fn rectangle(n: usize, m: usize) -> Self {
        if n == 0 {
            return Partition::empty();
        }
        Partition { parts: vec![n; m] }
    }

    /// For callers that already hold a weakly decreasing vector.
    fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Diagram inclusion `other ⊆ self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        Partition::from_sorted(
            (1..=cols)
                .map(|c| self.parts.iter().take_while(|&&p| p >= c).count())
                .collect(),
        )
    }

    /// `n_i = λ_i + r - i` for `i = 1..=r`.
    pub fn degree_vector(&self) -> DegreeVector {
        let r = self.len();
        DegreeVector {
            entries: self
                .parts
                .iter()
                .enumerate()
                .map(|(i, &p)| p + r - 1 - i)
                .collect(),
        }
    }

    /// Beta-set of length `len ≥ r`: `λ_i + len - i` for `i = 1..=len`.
    fn beta_set(&self, len: usize) -> Vec<usize> {
        (0..len).map(|i| self.part(i) + len - 1 - i).collect()
    }

    fn from_beta_set(beta: &[usize]) -> Partition {
        let mut sorted = beta.to_vec();
        sorted.sort_unstable_by(|a, b| b.cmp(a));
        let len = sorted.len();
        Partition::from_sorted(
            sorted
                .iter()
                .enumerate()
                .map(|(i, &b)| b + i + 1 - len)
                .collect(),
        )
    }

    /// Every partition covered by `self`, one per removable box, ordered by row.
    pub fn covers_down(&self) -> Result<Vec<CoverStep>, PartitionError> {
        if self.is_empty() {
            return Err(PartitionError::EmptyPartition);
        }
        Ok((0..self.len())
            .filter(|&i| self.part(i) > self.part(i + 1))
            .map(|i| {
                let mut smaller = self.parts.clone();
                smaller[i] -= 1;
                CoverStep {
                    larger: self.clone(),
                    smaller: Partition::from_sorted(smaller),
                    row: i + 1,
                    content: self.parts[i] as i64 - (i as i64 + 1),
                }
            })
            .collect())
    }

    /// Every partition covering `self`, one per addable box, ordered by row.
    pub fn covers_up(&self) -> Vec<CoverStep> {
        (0..=self.len())
            .filter(|&i| i == 0 || self.part(i - 1) > self.part(i))
            .map(|i| {
                let mut larger = self.parts.clone();
                if i == larger.len() {
                    larger.push(1);
                } else {
                    larger[i] += 1;
                }
                CoverStep {
                    content: larger[i] as i64 - (i as i64 + 1),
                    larger: Partition::from_sorted(larger),
                    smaller: self.clone(),
                    row: i + 1,
                }
            })
            .collect()
    }

    /// All `μ` such that `self/μ` is a border strip of size `k`, in reverse
    /// lexicographic order of `μ`.
    ///
    /// Removing a border strip of size `k` moves one bead of the beta-set
    /// down by `k` onto a free position; the height is the number of beads
    /// jumped over.
    pub fn border_strips_down(&self, k: usize) -> Vec<BorderStrip> {
        if k == 0 {
            return Vec::new();
        }
        let beta = self.beta_set(self.len());
        let mut out = Vec::new();
        for (i, &b) in beta.iter().enumerate() {
            if b < k || beta.contains(&(b - k)) {
                continue;
            }
            let target = b - k;
            let height = beta.iter().filter(|&&c| target < c && c < b).count();
            let mut moved = beta.clone();
            moved[i] = target;
            out.push(BorderStrip {
                larger: self.clone(),
                smaller: Partition::from_beta_set(&moved),
                size_k: k,
                height,
            });
        }
        out.sort_by(|a, b| b.smaller.cmp(&a.smaller));
        out
    }

    /// All `λ` such that `λ/self` is a border strip of size `k`, in reverse
    /// lexicographic order of `λ`.
    pub fn border_strips_up(&self, k: usize) -> Vec<BorderStrip> {
        if k == 0 {
            return Vec::new();
        }
        // k extra zero rows leave room for a strip that adds k new rows.
        let beta = self.beta_set(self.len() + k);
        let mut out = Vec::new();
        for (i, &b) in beta.iter().enumerate() {
            let target = b + k;
            if beta.contains(&target) {
                continue;
            }
            let height = beta.iter().filter(|&&c| b < c && c < target).count();
            let mut moved = beta.clone();
            moved[i] = target;
            out.push(BorderStrip {
                larger: Partition::from_beta_set(&moved),
                smaller: self.clone(),
                size_k: k,
                height,
            });
        }
        out.sort_by(|a, b| b.larger.cmp(&a.larger));
        out
    }

    /// `F_λ = |λ|! Π_{i<j}(n_i - n_j) / Π_i n_i!`, the number of saturated
    /// chains from `∅` to `λ` in the Young lattice.
    pub fn f_count(&self) -> BigUint {
        let n = self.degree_vector();
        let e = n.entries();
        let mut num = factorial(self.size());
        for i in 0..e.len() {
            for j in i + 1..e.len() {
                num *= BigUint::from(e[i] - e[j]);
            }
        }
        let den = e
            .iter()
            .fold(BigUint::one(), |acc, &ni| acc * factorial(ni));
        let (q, r) = num.div_rem(&den);
        assert!(r.is_zero(), "F_λ division not exact for {self}");
        q
    }

    /// Meet (componentwise min) and join (componentwise max) in the Young
    /// lattice.
    pub fn meet_join(&self, other: &Partition) -> (Partition, Partition) {
        let len = self.len().max(other.len());
        let meet = (0..len).map(|i| self.part(i).min(other.part(i))).collect();
        let join = (0..len).map(|i| self.part(i).max(other.part(i))).collect();
        (Partition::from_sorted(meet), Partition::from_sorted(join))
    }
}

/// Exact `n!`.
pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Reverse lexicographic: `(3) > (2,1) > (1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = PartitionError;
    fn try_from(parts: Vec<usize>) -> Result<Self, Self::Error> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl FromStr for Partition {
    type Err = PartitionError;

    /// Comma-separated parts, e.g. `"3,1"` or `"(3,1)"`; the empty string
    /// and `∅` are the empty partition.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let s = s
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(s)
            .trim();
        if s.is_empty() || s == "∅" {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim().parse::<usize>().map_err(|_| {
                    PartitionError::MalformedPartition(format!("{tok:?} is not a non-negative integer"))
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        // Zeros are stripped wherever they appear only at the tail; a zero
        // followed by a positive part fails the weak-decrease check.
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("∅");
        }
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{self}")
    }
}

/// Strictly decreasing sequence of non-negative integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct DegreeVector {
    entries: Vec<usize>,
}

impl DegreeVector {
    pub fn new(entries: Vec<usize>) -> Result<Self, PartitionError> {
        if entries.windows(2).any(|w| w[0] <= w[1]) {
            return Err(PartitionError::NotStrictlyDecreasing(entries));
        }
        Ok(DegreeVector { entries })
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Inverts `n_i = λ_i + r - i`.
    pub fn to_partition(&self) -> Partition {
        let r = self.entries.len();
        Partition::from_sorted(
            self.entries
                .iter()
                .enumerate()
                .map(|(i, &n)| n + i + 1 - r)
                .collect(),
        )
    }
}

impl fmt::Display for DegreeVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        write!(f, "({})", inner.join(","))
    }
}

/// One box added or removed: `larger = smaller + box in row` (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverStep {
    pub larger: Partition,
    pub smaller: Partition,
    pub row: usize,
    pub content: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BorderStrip {
    pub larger: Partition,
    pub smaller: Partition,
    pub size_k: usize,
    /// Rows occupied minus one.
    pub height: usize,
}

impl BorderStrip {
    /// `(-1)^height`.
    pub fn sign(&self) -> i64 {
        if self.height % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    out
}

fn fill(remaining: usize, max_part: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of size `0..=max`, by increasing size and reverse
/// lexicographic within a size.
pub fn partitions_up_to(max: usize) -> Vec<Partition> {
    (0..=max).flat_map(partitions_of).collect()
}

/// Every partition contained in `lambda` (its order ideal in the Young
/// lattice), grouped by size.
pub fn down_set(lambda: &Partition) -> Vec<Vec<Partition>> {
    let mut by_size: Vec<Vec<Partition>> = vec![Vec::new(); lambda.size() + 1];
    let mut current = Vec::new();
    fn walk(lambda: &Partition, row: usize, cap: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<Partition>>) {
        let bound = cap.min(lambda.part(row));
        if row >= lambda.len() || bound == 0 {
            let p = Partition::from_sorted(current.clone());
            let s = p.size();
            out[s].push(p);
            return;
        }
        for v in (0..=bound).rev() {
            current.push(v);
            walk(lambda, row + 1, v, current, out);
            current.pop();
        }
    }
    walk(lambda, 0, usize::MAX, &mut current, &mut by_size);
    for level in &mut by_size {
        level.sort_by(|a, b| b.cmp(a));
        level.dedup();
    }
    by_size
}

/// Default size bound for [`f_count_oracle`].
pub const DEFAULT_ORACLE_BOUND: usize = 12;

/// `F_λ` by counting lattice paths: `F_∅ = 1`, `F_λ = Σ_{μ⋖λ} F_μ`.
pub fn f_count_oracle(lambda: &Partition) -> Result<BigUint, PartitionError> {
    f_count_oracle_bounded(lambda, DEFAULT_ORACLE_BOUND)
}

pub fn f_count_oracle_bounded(lambda: &Partition, bound: usize) -> Result<BigUint, PartitionError> {
    if lambda.size() > bound {
        return Err(PartitionError::OracleBoundExceeded {
            size: lambda.size(),
            bound,
        });
    }
    let mut memo: HashMap<Partition, BigUint> = HashMap::new();
    memo.insert(Partition::empty(), BigUint::one());
    for level in down_set(lambda).into_iter().skip(1) {
        for p in level {
            let total = p
                .covers_down()
                .expect("non-empty")
                .iter()
                .map(|s| memo[&s.smaller].clone())
                .sum();
            memo.insert(p, total);
        }
    }
    Ok(memo.remove(lambda).expect("λ is in its own down-set"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn parse() {
        assert_eq!("3,1".parse::<Partition>().unwrap(), p(&[3, 1]));
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("2,1,0,0".parse::<Partition>().unwrap(), p(&[2, 1]));
        assert_eq!("(4,2)".parse::<Partition>().unwrap(), p(&[4, 2]));
        assert_eq!("∅".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!(p(&[3, 3, 1]).to_string().parse::<Partition>().unwrap(), p(&[3, 3, 1]));
        assert!(matches!(
            "1,3".parse::<Partition>(),
            Err(PartitionError::MalformedPartition(_))
        ));
        assert!(matches!(
            "2,x".parse::<Partition>(),
            Err(PartitionError::MalformedPartition(_))
        ));
        assert!("2,0,1".parse::<Partition>().is_err());
        assert!("-1".parse::<Partition>().is_err());
    }

    #[test]
    fn enumeration() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(
            partitions_of(4),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
        assert_eq!(partitions_of(5).len(), 7);
    }

    #[test]
    fn degree_vectors() {
        assert_eq!(p(&[2, 2]).degree_vector().entries(), &[3, 2]);
        assert_eq!(p(&[3, 1]).degree_vector().entries(), &[4, 1]);
        assert!(Partition::empty().degree_vector().is_empty());
        assert_eq!(p(&[3, 1]).degree_vector().to_partition(), p(&[3, 1]));
        assert!(DegreeVector::new(vec![2, 2]).is_err());
    }

    #[test]
    fn covers_down_contents() {
        let steps = p(&[2, 1]).covers_down().unwrap();
        let got: Vec<_> = steps.iter().map(|s| (s.smaller.clone(), s.content)).collect();
        assert_eq!(got, vec![(p(&[1, 1]), 1), (p(&[2]), -1)]);

        let steps = p(&[1]).covers_down().unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!((steps[0].smaller.clone(), steps[0].content), (Partition::empty(), 0));

        let steps = p(&[2, 2]).covers_down().unwrap();
        assert_eq!(steps.len(), 1);
        assert_eq!((steps[0].smaller.clone(), steps[0].content, steps[0].row), (p(&[2, 1]), 0, 2));

        assert_eq!(Partition::empty().covers_down(), Err(PartitionError::EmptyPartition));
    }

    #[test]
    fn covers_up_contents() {
        let got: Vec<_> = p(&[1]).covers_up().into_iter().map(|s| (s.larger, s.content)).collect();
        assert_eq!(got, vec![(p(&[2]), 1), (p(&[1, 1]), -1)]);

        let got: Vec<_> = Partition::empty().covers_up().into_iter().map(|s| (s.larger, s.content)).collect();
        assert_eq!(got, vec![(p(&[1]), 0)]);

        let got: Vec<_> = p(&[2, 1]).covers_up().into_iter().map(|s| (s.larger, s.content)).collect();
        assert_eq!(got, vec![(p(&[3, 1]), 2), (p(&[2, 2]), 0), (p(&[2, 1, 1]), -2)]);
    }

    #[test]
    fn cover_step_content_matches_definition() {
        for lam in partitions_up_to(6).into_iter().skip(1) {
            for s in lam.covers_down().unwrap() {
                assert_eq!(s.content, s.larger.part(s.row - 1) as i64 - s.row as i64);
                assert_eq!(s.larger.size(), s.smaller.size() + 1);
                assert!(s.larger.contains(&s.smaller));
            }
        }
    }

    fn strips(v: Vec<BorderStrip>, up: bool) -> Vec<(Partition, usize)> {
        v.into_iter()
            .map(|s| (if up { s.larger } else { s.smaller }, s.height))
            .collect()
    }

    #[test]
    fn border_strips_down_examples() {
        assert_eq!(
            strips(p(&[2, 2]).border_strips_down(2), false),
            vec![(p(&[2]), 0), (p(&[1, 1]), 1)]
        );
        assert_eq!(strips(p(&[2]).border_strips_down(2), false), vec![(Partition::empty(), 0)]);
        assert_eq!(strips(p(&[2, 2]).border_strips_down(3), false), vec![(p(&[1]), 1)]);
        assert!(p(&[2, 1]).border_strips_down(2).is_empty());
    }

    #[test]
    fn border_strips_up_examples() {
        assert_eq!(
            strips(Partition::empty().border_strips_up(2), true),
            vec![(p(&[2]), 0), (p(&[1, 1]), 1)]
        );
        assert_eq!(
            strips(p(&[1]).border_strips_up(2), true),
            vec![(p(&[3]), 0), (p(&[1, 1, 1]), 1)]
        );
        assert_eq!(
            strips(p(&[2]).border_strips_up(1), true),
            vec![(p(&[3]), 0), (p(&[2, 1]), 0)]
        );
    }

    /// Geometric border-strip test on the skew diagram `big/small`:
    /// occupied rows contiguous, consecutive rows overlapping in exactly
    /// one column.
    fn is_border_strip(big: &Partition, small: &Partition) -> Option<usize> {
        if !big.contains(small) || big.size() == small.size() {
            return None;
        }
        let rows: Vec<usize> = (0..big.len()).filter(|&i| big.part(i) > small.part(i)).collect();
        if rows.windows(2).any(|w| w[1] != w[0] + 1) {
            return None;
        }
        for w in rows.windows(2) {
            if big.part(w[1]) != small.part(w[0]) + 1 {
                return None;
            }
        }
        Some(rows.len() - 1)
    }

    #[test]
    fn strips_match_geometric_oracle() {
        for lam in partitions_up_to(9) {
            for k in 1..=lam.size().min(5) {
                let mut oracle: Vec<(Partition, usize)> = partitions_of(lam.size() - k)
                    .into_iter()
                    .filter_map(|mu| is_border_strip(&lam, &mu).map(|h| (mu, h)))
                    .collect();
                oracle.sort_by(|a, b| b.0.cmp(&a.0));
                assert_eq!(strips(lam.border_strips_down(k), false), oracle, "{lam} k={k}");
            }
        }
        assert_eq!(is_border_strip(&p(&[2, 1]), &p(&[1])), None);
    }

    #[test]
    fn single_box_strips_are_covers() {
        for lam in partitions_up_to(7).into_iter().skip(1) {
            let mut via_strips: Vec<_> = lam.border_strips_down(1).into_iter().map(|s| (s.smaller, s.height)).collect();
            let mut via_covers: Vec<_> = lam.covers_down().unwrap().into_iter().map(|s| (s.smaller, 0)).collect();
            via_strips.sort();
            via_covers.sort();
            assert_eq!(via_strips, via_covers);
        }
    }

    #[test]
    fn f_count_values() {
        for n in 0..6 {
            assert_eq!(p(&[n]).f_count(), BigUint::from(1u32));
        }
        assert_eq!(p(&[2, 1]).f_count(), BigUint::from(2u32));
        assert_eq!(p(&[3, 1]).f_count(), BigUint::from(3u32));
        assert_eq!(Partition::empty().f_count(), BigUint::from(1u32));
        assert_eq!(p(&[2, 2]).f_count(), BigUint::from(2u32));
    }

    #[test]
    fn oracle_values_and_bound() {
        assert_eq!(f_count_oracle(&p(&[2, 2])).unwrap(), BigUint::from(2u32));
        assert_eq!(f_count_oracle(&Partition::empty()).unwrap(), BigUint::from(1u32));
        assert_eq!(
            f_count_oracle(&p(&[13])),
            Err(PartitionError::OracleBoundExceeded { size: 13, bound: 12 })
        );
        assert_eq!(f_count_oracle_bounded(&p(&[13]), 13).unwrap(), BigUint::from(1u32));
    }

    #[test]
    fn meet_and_join() {
        assert_eq!(p(&[3, 1]).meet_join(&p(&[2, 2])), (p(&[2, 1]), p(&[3, 2])));
        assert_eq!(p(&[3, 1]).meet_join(&p(&[3, 1])), (p(&[3, 1]), p(&[3, 1])));
        assert_eq!(p(&[2]).meet_join(&Partition::empty()), (Partition::empty(), p(&[2])));
    }

    #[test]
    fn conjugation() {
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
        assert_eq!(Partition::rectangle(3, 2).conjugate(), Partition::rectangle(2, 3));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        for lam in partitions_up_to(8) {
            assert_eq!(lam.conjugate().conjugate(), lam);
        }
    }

    #[test]
    fn down_set_of_two_one() {
        let levels = down_set(&p(&[2, 1]));
        assert_eq!(
            levels,
            vec![
                vec![Partition::empty()],
                vec![p(&[1])],
                vec![p(&[2]), p(&[1, 1])],
                vec![p(&[2, 1])],
            ]
        );
    }

    #[test]
    fn json_form_is_an_array() {
        assert_eq!(serde_json::to_string(&p(&[3, 1])).unwrap(), "[3,1]");
        assert_eq!(serde_json::from_str::<Partition>("[3,1,0]").unwrap(), p(&[3, 1]));
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
    }
}
