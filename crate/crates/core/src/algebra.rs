//! Cyclic Nakayama algebras given by Kupisch series or by defining relations.
//!
//! Vertices are labelled `1..=n` and the arrows run `i → i+1` (indices mod n).
//! The projective `P_i` has composition factors `i, i+1, …, i + c_i − 1`, so its
//! socle is `S_{i + c_i − 1}`. Lengths may exceed `n`, in which case the
//! projective winds around the cycle.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgebraError, ParseError};

/// A connected cyclic Nakayama algebra, stored as its validated Kupisch series.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Algebra {
    lengths: Vec<usize>,
}

impl Algebra {
    pub fn new(lengths: Vec<usize>) -> Result<Self, AlgebraError> {
        validate_kupisch(lengths.len(), &lengths)
    }

    /// Number of vertices (equivalently, of simple modules).
    pub fn rank(&self) -> usize {
        self.lengths.len()
    }

    /// The Kupisch series `c_1, …, c_n` (0-based slice).
    pub fn lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Composition length of the projective `P_v` (`v` is 1-based).
    pub fn proj_len(&self, v: usize) -> usize {
        self.lengths[self.wrap(v) - 1]
    }

    /// Reduces any positive vertex label into `1..=n`.
    pub fn wrap(&self, v: usize) -> usize {
        debug_assert!(v >= 1);
        (v - 1) % self.rank() + 1
    }

    /// Vertex `v + delta`, wrapped into `1..=n`.
    pub fn shift(&self, v: usize, delta: isize) -> usize {
        let n = self.rank() as isize;
        ((v as isize - 1 + delta).rem_euclid(n) + 1) as usize
    }

    /// Socle index of the projective `P_v`.
    pub fn proj_socle(&self, v: usize) -> usize {
        self.wrap(v + self.proj_len(v) - 1)
    }

    pub fn total_length(&self) -> usize {
        self.lengths.iter().sum()
    }

    pub fn max_len(&self) -> usize {
        self.lengths.iter().copied().max().unwrap_or(0)
    }

    pub fn into_lengths(self) -> Vec<usize> {
        self.lengths
    }
}

impl TryFrom<Vec<usize>> for Algebra {
    type Error = AlgebraError;

    fn try_from(lengths: Vec<usize>) -> Result<Self, Self::Error> {
        Algebra::new(lengths)
    }
}

impl From<Algebra> for Vec<usize> {
    fn from(a: Algebra) -> Self {
        a.lengths
    }
}

impl fmt::Display for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_list(f, &self.lengths)
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Parses the comma separated form `"3,4,3,3,2"`.
impl FromStr for Algebra {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lengths = parse_usize_list(s)?;
        Ok(validate_kupisch(lengths.len(), &lengths)?)
    }
}

fn parse_usize_list(s: &str) -> Result<Vec<usize>, ParseError> {
    if s.trim().is_empty() {
        return Err(ParseError::Malformed {
            input: s.to_string(),
            reason: "empty Kupisch series".into(),
        });
    }
    s.split(',')
        .enumerate()
        .map(|(i, tok)| {
            tok.trim().parse::<usize>().map_err(|e| ParseError::Token {
                token: tok.to_string(),
                index: i + 1,
                reason: e.to_string(),
            })
        })
        .collect()
}

/// Checks a raw Kupisch series of declared rank `n`.
///
/// Requires `c_i ≥ 2` and `c_{i+1} ≥ c_i − 1` cyclically. Errors carry the
/// 1-based offending index.
pub fn validate_kupisch(n: usize, c: &[usize]) -> Result<Algebra, AlgebraError> {
    if n < 1 || c.len() != n {
        return Err(AlgebraError::BadRank {
            rank: n,
            expected: n,
            found: c.len(),
        });
    }
    if let Some((i, &value)) = c.iter().enumerate().find(|(_, &v)| v < 2) {
        return Err(AlgebraError::TooShort {
            index: i + 1,
            value,
        });
    }
    for i in 0..n {
        let next = (i + 1) % n;
        if c[next] + 1 < c[i] {
            return Err(AlgebraError::NotAdmissible {
                index: next + 1,
                value: c[next],
                previous_index: i + 1,
                previous: c[i],
            });
        }
    }
    Ok(Algebra {
        lengths: c.to_vec(),
    })
}

/// One zero relation: the path of `arrows` arrows starting at vertex `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Relation {
    pub start: usize,
    pub arrows: usize,
}

/// An irredundant system of zero relations on the cyclic quiver with `n` vertices.
///
/// Relations are kept sorted by start vertex. The arrow count is stored rather
/// than the end vertex because a relation may wind around the cycle.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RelationSystem {
    n: usize,
    rels: Vec<Relation>,
}

impl RelationSystem {
    pub fn new(n: usize, mut rels: Vec<Relation>) -> Result<Self, AlgebraError> {
        if n < 1 {
            return Err(AlgebraError::InvalidRelations(
                "rank must be at least 1".into(),
            ));
        }
        if rels.is_empty() {
            return Err(AlgebraError::InvalidRelations(
                "a cyclic Nakayama algebra needs at least one relation".into(),
            ));
        }
        for r in &rels {
            if r.start < 1 || r.start > n {
                return Err(AlgebraError::InvalidRelations(format!(
                    "start vertex {} out of range 1..={n}",
                    r.start
                )));
            }
            if r.arrows < 2 {
                return Err(AlgebraError::InvalidRelations(format!(
                    "relation at {} has {} arrow(s); at least 2 are required",
                    r.start, r.arrows
                )));
            }
        }
        rels.sort();
        if let Some(w) = rels.windows(2).find(|w| w[0].start == w[1].start) {
            return Err(AlgebraError::InvalidRelations(format!(
                "two relations start at vertex {}",
                w[0].start
            )));
        }
        Ok(RelationSystem { n, rels })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn relations(&self) -> &[Relation] {
        &self.rels
    }

    /// Number of relations `r`.
    pub fn len(&self) -> usize {
        self.rels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rels.is_empty()
    }

    pub fn starts(&self) -> Vec<usize> {
        self.rels.iter().map(|r| r.start).collect()
    }

    /// Socle index `start + arrows − 1 (mod n)` of each relation, in relation order.
    pub fn socles(&self) -> Vec<usize> {
        self.rels
            .iter()
            .map(|r| (r.start + r.arrows - 2) % self.n + 1)
            .collect()
    }
}

impl fmt::Display for RelationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={};", self.n)?;
        for (i, r) in self.rels.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{}:{}", r.start, r.arrows)?;
        }
        Ok(())
    }
}

/// Parses `"n=5;1:3,3:3,5:2"` (start:arrows pairs).
impl FromStr for RelationSystem {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = |reason: &str| ParseError::Malformed {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (head, body) = s
            .split_once(';')
            .ok_or_else(|| malformed("expected \"n=N;start:arrows,...\""))?;
        let n_tok = head
            .trim()
            .strip_prefix("n=")
            .ok_or_else(|| malformed("relation list must begin with \"n=\""))?;
        let n = n_tok
            .trim()
            .parse::<usize>()
            .map_err(|e| ParseError::Token {
                token: n_tok.to_string(),
                index: 0,
                reason: e.to_string(),
            })?;
        let mut rels = Vec::new();
        for (i, tok) in body.split(',').enumerate() {
            let bad = |reason: String| ParseError::Token {
                token: tok.to_string(),
                index: i + 1,
                reason,
            };
            let (a, b) = tok
                .split_once(':')
                .ok_or_else(|| bad("expected start:arrows".into()))?;
            let start = a.trim().parse::<usize>().map_err(|e| bad(e.to_string()))?;
            let arrows = b.trim().parse::<usize>().map_err(|e| bad(e.to_string()))?;
            rels.push(Relation { start, arrows });
        }
        Ok(RelationSystem::new(n, rels)?)
    }
}

/// The relation system of `a`: one relation per minimal projective in its
/// socle class, i.e. per vertex `i` with `c_{i+1} ≥ c_i`.
pub fn relations_from_kupisch(a: &Algebra) -> RelationSystem {
    let n = a.rank();
    let c = a.lengths();
    let rels = (0..n)
        .filter(|&i| c[(i + 1) % n] >= c[i])
        .map(|i| Relation {
            start: i + 1,
            arrows: c[i],
        })
        .collect();
    RelationSystem { n, rels }
}

/// Rebuilds the Kupisch series: `c_i = arrows + dist(i, s)` where `s` is the
/// first relation start at or cyclically after `i`.
pub fn kupisch_from_relations(r: &RelationSystem) -> Result<Algebra, AlgebraError> {
    let n = r.rank();
    let rels = r.relations();
    let lengths: Vec<usize> = (1..=n)
        .map(|i| {
            let rel = rels.iter().find(|rel| rel.start >= i).unwrap_or(&rels[0]);
            rel.arrows + (rel.start + n - i) % n
        })
        .collect();
    let a = validate_kupisch(n, &lengths).map_err(|e| {
        AlgebraError::InconsistentRelations(format!("derived series {lengths:?} is invalid: {e}"))
    })?;
    let back = relations_from_kupisch(&a);
    if &back != r {
        return Err(AlgebraError::InconsistentRelations(format!(
            "relations are redundant: series {a} has relations {back}"
        )));
    }
    Ok(a)
}

/// Lengths `d_1, …, d_n` of the indecomposable injectives, `d_j` for socle `S_j`.
pub fn injective_lengths(a: &Algebra) -> Vec<usize> {
    (1..=a.rank())
        .map(|j| {
            let mut len = 1;
            while len < a.proj_len(a.shift(j, -(len as isize))) {
                len += 1;
            }
            len
        })
        .collect()
}

/// The opposite algebra, relabelled `v ↦ n + 1 − v` so that its arrows again run
/// `i → i+1`. Its projectives are the duals of the injectives of `a`.
pub fn opposite(a: &Algebra) -> Algebra {
    let mut lengths = injective_lengths(a);
    lengths.reverse();
    Algebra::new(lengths).expect("opposite of a Nakayama algebra is Nakayama")
}

pub fn is_selfinjective(a: &Algebra) -> bool {
    a.lengths().windows(2).all(|w| w[0] == w[1])
}

fn least_rotation(c: &[usize]) -> Vec<usize> {
    (0..c.len())
        .map(|k| c[k..].iter().chain(&c[..k]).copied().collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

fn is_least_rotation(c: &[usize]) -> bool {
    (1..c.len()).all(|k| c[k..].iter().chain(&c[..k]).ge(c.iter()))
}

/// Lexicographically least cyclic rotation; rotations give isomorphic algebras.
pub fn canonicalize(a: &Algebra) -> Algebra {
    Algebra {
        lengths: least_rotation(a.lengths()),
    }
}

/// Bounds for an exhaustive enumeration of Kupisch series.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationSpec {
    pub rank_min: usize,
    pub rank_max: usize,
    pub max_len: usize,
    pub dedupe: bool,
}

impl EnumerationSpec {
    pub fn new(
        rank_min: usize,
        rank_max: usize,
        max_len: usize,
        dedupe: bool,
    ) -> Result<Self, AlgebraError> {
        let spec = EnumerationSpec {
            rank_min,
            rank_max,
            max_len,
            dedupe,
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        if self.rank_min < 1 {
            return Err(AlgebraError::InvalidSpec(
                "rank_min must be at least 1".into(),
            ));
        }
        if self.rank_min > self.rank_max {
            return Err(AlgebraError::InvalidSpec(format!(
                "rank_min {} exceeds rank_max {}",
                self.rank_min, self.rank_max
            )));
        }
        if self.max_len < 2 {
            return Err(AlgebraError::InvalidSpec(
                "max_len must be at least 2".into(),
            ));
        }
        Ok(())
    }
}

/// Every valid series of rank `n` with entries in `2..=max_len`, in
/// lexicographic order.
struct RankEnumerator {
    max_len: usize,
    dedupe: bool,
    next: Option<Vec<usize>>,
}

impl RankEnumerator {
    fn new(n: usize, max_len: usize, dedupe: bool) -> Self {
        let next = (n >= 1 && max_len >= 2).then(|| vec![2; n]);
        RankEnumerator {
            max_len,
            dedupe,
            next,
        }
    }

    fn advance(&mut self) {
        let Some(cur) = self.next.as_mut() else {
            return;
        };
        for slot in cur.iter_mut().rev() {
            if *slot < self.max_len {
                *slot += 1;
                return;
            }
            *slot = 2;
        }
        self.next = None;
    }
}

impl Iterator for RankEnumerator {
    type Item = Algebra;

    fn next(&mut self) -> Option<Algebra> {
        loop {
            let cur = self.next.clone()?;
            self.advance();
            if self.dedupe && !is_least_rotation(&cur) {
                continue;
            }
            if let Ok(a) = validate_kupisch(cur.len(), &cur) {
                return Some(a);
            }
        }
    }
}

/// Streams every algebra within `spec`, ordered by rank and then
/// lexicographically. With `dedupe` each rotation class appears once, as its
/// canonical representative.
pub fn enumerate_kupisch(spec: &EnumerationSpec) -> impl Iterator<Item = Algebra> {
    let EnumerationSpec {
        rank_min,
        rank_max,
        max_len,
        dedupe,
    } = *spec;
    (rank_min.max(1)..=rank_max).flat_map(move |n| RankEnumerator::new(n, max_len, dedupe))
}
