//! Degree-sequence primitives.
//!
//! Labels are 1-based throughout the public API: label `i` refers to the
//! `i`-th entry of a sequence. A [`DegreeSequence`] is always sorted in
//! non-increasing order, so label 1 is a vertex of maximum degree. A
//! [`LabeledIntSequence`] has no ordering requirement and may hold values
//! that are not valid degrees (negative entries, entries above `n - 1`);
//! such sequences are simply not graphic.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// 1-based vertex label.
pub type Label = usize;

/// Largest length accepted by the analytic routines.
pub const MAX_ANALYTIC_LEN: usize = 1_000_000;

/// Splits on commas and whitespace and parses each token as a decimal integer.
///
/// Positions in errors are 1-based token indices.
pub fn parse_integers(text: &str) -> Result<Vec<i64>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|tok| !tok.is_empty())
        .enumerate()
        .map(|(idx, tok)| {
            tok.parse::<i64>().map_err(|_| Error::Parse {
                position: idx + 1,
                token: tok.to_string(),
            })
        })
        .collect()
}

fn write_joined<T: fmt::Display>(f: &mut fmt::Formatter<'_>, values: &[T]) -> fmt::Result {
    for (idx, v) in values.iter().enumerate() {
        if idx > 0 {
            f.write_str(",")?;
        }
        write!(f, "{v}")?;
    }
    Ok(())
}

/// Erdős–Gallai test on an arbitrary integer list.
///
/// Sorts a working copy; runs in `O(n log n)`.
pub fn is_graphic(values: &[i64]) -> bool {
    let mut work = values.to_vec();
    work.sort_unstable_by(|a, b| b.cmp(a));
    is_graphic_sorted(&work)
}

/// Erdős–Gallai test on a list already sorted in non-increasing order.
pub(crate) fn is_graphic_sorted(desc: &[i64]) -> bool {
    let n = desc.len();
    if n == 0 {
        return true;
    }
    debug_assert!(desc.windows(2).all(|w| w[0] >= w[1]));
    if desc[n - 1] < 0 || desc[0] > n as i64 - 1 {
        return false;
    }
    let mut prefix = Vec::with_capacity(n + 1);
    prefix.push(0i64);
    for &d in desc {
        prefix.push(prefix[prefix.len() - 1] + d);
    }
    if prefix[n] % 2 != 0 {
        return false;
    }
    // `ge` counts the entries with value >= k; it only shrinks as k grows.
    let mut ge = n;
    for k in 1..=n {
        let kk = k as i64;
        while ge > 0 && desc[ge - 1] < kk {
            ge -= 1;
        }
        let split = ge.max(k);
        let rhs = kk * (kk - 1) + (ge.saturating_sub(k) as i64) * kk + (prefix[n] - prefix[split]);
        if prefix[k] > rhs {
            return false;
        }
    }
    true
}

/// A non-increasing list of degrees `n-1 >= d_1 >= ... >= d_n >= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DegreeSequence {
    values: Vec<usize>,
}

impl DegreeSequence {
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        if n == 0 {
            return Err(Error::EmptySequence);
        }
        if n > MAX_ANALYTIC_LEN {
            return Err(Error::TooLarge {
                n,
                max: MAX_ANALYTIC_LEN,
            });
        }
        if let Some(pos) = values.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotNonIncreasing { position: pos + 2 });
        }
        if values[0] > n - 1 {
            return Err(Error::DegreeOutOfRange {
                position: 1,
                degree: values[0],
                max: n - 1,
            });
        }
        Ok(Self { values })
    }

    /// Builds a sequence from signed integers, rejecting negatives as parse errors.
    pub fn from_signed(values: &[i64]) -> Result<Self> {
        let unsigned = values
            .iter()
            .enumerate()
            .map(|(idx, &v)| {
                usize::try_from(v).map_err(|_| Error::Parse {
                    position: idx + 1,
                    token: v.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(unsigned)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Degree at a 1-based label.
    pub fn degree(&self, label: Label) -> usize {
        self.values[label - 1]
    }

    pub fn max_degree(&self) -> usize {
        self.values[0]
    }

    pub fn min_degree(&self) -> usize {
        self.values[self.values.len() - 1]
    }

    pub fn degree_sum(&self) -> u64 {
        self.values.iter().map(|&d| d as u64).sum()
    }

    /// Edge count of any realization, `sum / 2`.
    pub fn edge_count(&self) -> u64 {
        self.degree_sum() / 2
    }

    pub(crate) fn signed(&self) -> Vec<i64> {
        self.values.iter().map(|&d| d as i64).collect()
    }

    pub fn is_graphic(&self) -> bool {
        is_graphic_sorted(&self.signed())
    }

    pub(crate) fn check_label(&self, label: Label) -> Result<()> {
        check_label(label, self.len())
    }

    /// Returns an error unless the sequence is graphic.
    pub fn require_graphic(&self) -> Result<()> {
        if self.is_graphic() {
            Ok(())
        } else {
            Err(Error::NotGraphic)
        }
    }

    /// `c_i = n - d_{n+1-i} - 1`. Vertex `i` here corresponds to vertex
    /// `n + 1 - i` of the complement.
    pub fn complement(&self) -> DegreeSequence {
        let n = self.len();
        let values = self.values.iter().rev().map(|&d| n - 1 - d).collect();
        DegreeSequence { values }
    }

    /// The label of vertex `label` in the complement sequence.
    pub fn mirror(&self, label: Label) -> Label {
        self.len() + 1 - label
    }

    pub fn to_labeled(&self) -> LabeledIntSequence {
        LabeledIntSequence {
            values: self.signed(),
        }
    }

    /// Subtracts 1 from the first `d_i` entries other than `label`, then sets
    /// entry `label` to zero. Graphicality is preserved in both directions.
    pub fn kleitman_wang_reduce(&self, label: Label) -> Result<LabeledIntSequence> {
        self.check_label(label)?;
        let needed = self.degree(label);
        let available = self.len() - 1;
        if needed > available {
            return Err(Error::InsufficientEntries {
                label,
                needed,
                available,
            });
        }
        let mut values = self.signed();
        values[label - 1] = 0;
        (0..self.len())
            .filter(|&idx| idx != label - 1)
            .take(needed)
            .for_each(|idx| values[idx] -= 1);
        Ok(LabeledIntSequence { values })
    }

    pub fn increment(&self, labels: &[Label]) -> Result<LabeledIntSequence> {
        self.to_labeled().increment(labels)
    }

    pub fn decrement(&self, labels: &[Label]) -> Result<LabeledIntSequence> {
        self.to_labeled().decrement(labels)
    }
}

impl TryFrom<Vec<usize>> for DegreeSequence {
    type Error = Error;

    fn try_from(values: Vec<usize>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<DegreeSequence> for Vec<usize> {
    fn from(seq: DegreeSequence) -> Self {
        seq.values
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::from_signed(&parse_integers(s)?)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.values)
    }
}

pub(crate) fn check_label(label: Label, n: usize) -> Result<()> {
    if label == 0 || label > n {
        Err(Error::IndexOutOfRange { label, n })
    } else {
        Ok(())
    }
}

fn check_labels(labels: &[Label], n: usize) -> Result<()> {
    for (idx, &label) in labels.iter().enumerate() {
        check_label(label, n)?;
        if labels[..idx].contains(&label) {
            return Err(Error::DuplicateIndex { label });
        }
    }
    Ok(())
}

/// An integer sequence with fixed labels `1..=n` and no ordering requirement.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct LabeledIntSequence {
    values: Vec<i64>,
}

impl LabeledIntSequence {
    pub fn new(values: Vec<i64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptySequence);
        }
        Ok(Self { values })
    }

    pub(crate) fn from_values(values: Vec<i64>) -> Self {
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, label: Label) -> i64 {
        self.values[label - 1]
    }

    pub fn is_graphic(&self) -> bool {
        is_graphic(&self.values)
    }

    fn shifted(&self, labels: &[Label], delta: i64) -> Result<Self> {
        check_labels(labels, self.len())?;
        let mut values = self.values.clone();
        for &label in labels {
            values[label - 1] += delta;
        }
        Ok(Self { values })
    }

    /// Adds one at each label.
    pub fn increment(&self, labels: &[Label]) -> Result<Self> {
        self.shifted(labels, 1)
    }

    /// Subtracts one at each label.
    pub fn decrement(&self, labels: &[Label]) -> Result<Self> {
        self.shifted(labels, -1)
    }

    /// Labels ordered by non-increasing value; ties keep label order.
    pub fn sorting_permutation(&self) -> Vec<Label> {
        let mut labels: Vec<Label> = (1..=self.len()).collect();
        labels.sort_by(|&a, &b| self.values[b - 1].cmp(&self.values[a - 1]));
        labels
    }

    pub fn sorted_values(&self) -> Vec<i64> {
        let mut v = self.values.clone();
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// The sorted degree sequence plus `perm`, where `perm[k]` is the
    /// original label of sorted position `k + 1`.
    pub fn to_degree_sequence(&self) -> Result<(DegreeSequence, Vec<Label>)> {
        let perm = self.sorting_permutation();
        let sorted: Vec<i64> = perm.iter().map(|&l| self.values[l - 1]).collect();
        Ok((DegreeSequence::from_signed(&sorted)?, perm))
    }
}

impl TryFrom<Vec<i64>> for LabeledIntSequence {
    type Error = Error;

    fn try_from(values: Vec<i64>) -> Result<Self> {
        Self::new(values)
    }
}

impl From<LabeledIntSequence> for Vec<i64> {
    fn from(seq: LabeledIntSequence) -> Self {
        seq.values
    }
}

impl From<&DegreeSequence> for LabeledIntSequence {
    fn from(seq: &DegreeSequence) -> Self {
        seq.to_labeled()
    }
}

impl FromStr for LabeledIntSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_integers(s)?)
    }
}

impl fmt::Display for LabeledIntSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_joined(f, &self.values)
    }
}

/// Outcome of comparing two sequences under majorization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Majorization {
    LeftMajorizes,
    RightMajorizes,
    Equal,
    Incomparable,
    UnequalSums,
}

impl Majorization {
    /// True for `LeftMajorizes` and `Equal`.
    pub fn left_dominates(self) -> bool {
        matches!(self, Majorization::LeftMajorizes | Majorization::Equal)
    }

    pub fn right_dominates(self) -> bool {
        matches!(self, Majorization::RightMajorizes | Majorization::Equal)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Majorization::LeftMajorizes => "left-majorizes",
            Majorization::RightMajorizes => "right-majorizes",
            Majorization::Equal => "equal",
            Majorization::Incomparable => "incomparable",
            Majorization::UnequalSums => "unequal-sums",
        }
    }
}

impl fmt::Display for Majorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Prefix-sum comparison of two equal-length integer lists taken in the
/// order given (callers sort first when comparing unsorted sequences).
pub fn compare_prefix_sums(a: &[i64], b: &[i64]) -> Result<Majorization> {
    if a.len() != b.len() {
        return Err(Error::LengthMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    let (mut sa, mut sb) = (0i64, 0i64);
    let (mut left_ok, mut right_ok) = (true, true);
    for (&x, &y) in a.iter().zip(b) {
        sa += x;
        sb += y;
        match sa.cmp(&sb) {
            Ordering::Less => left_ok = false,
            Ordering::Greater => right_ok = false,
            Ordering::Equal => {}
        }
    }
    Ok(if sa != sb {
        Majorization::UnequalSums
    } else {
        match (left_ok, right_ok) {
            (true, true) => Majorization::Equal,
            (true, false) => Majorization::LeftMajorizes,
            (false, true) => Majorization::RightMajorizes,
            (false, false) => Majorization::Incomparable,
        }
    })
}

pub fn majorizes(a: &DegreeSequence, b: &DegreeSequence) -> Result<Majorization> {
    compare_prefix_sums(&a.signed(), &b.signed())
}
