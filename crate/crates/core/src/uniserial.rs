//! Indecomposable modules over a cyclic Nakayama algebra and their syzygies.
//!
//! Every indecomposable is uniserial and is the quotient of `P_top` of the
//! given length, so the pair `(top, len)` with `1 ≤ len ≤ c_top` describes it
//! completely.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::algebra::{injective_lengths, Algebra};
use crate::error::{ModuleError, ParseError};
use crate::Dim;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct UniserialModule {
    pub top: usize,
    pub len: usize,
}

impl UniserialModule {
    pub fn socle(&self, a: &Algebra) -> usize {
        a.wrap(self.top + self.len - 1)
    }

    pub fn is_projective(&self, a: &Algebra) -> bool {
        self.len == a.proj_len(self.top)
    }

    pub fn is_simple(&self) -> bool {
        self.len == 1
    }

    /// Composition factors from top to socle, e.g. `[2, 3, 4, 5]` for `(2, 4)`.
    pub fn composition_series(&self, a: &Algebra) -> Vec<usize> {
        (0..self.len).map(|k| a.wrap(self.top + k)).collect()
    }
}

impl fmt::Display for UniserialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "top={},len={}", self.top, self.len)
    }
}

/// A `(top, len)` pair parsed from `"top=T,len=L"`, not yet checked against an
/// algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModuleSpec {
    pub top: usize,
    pub len: usize,
}

impl FromStr for ModuleSpec {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut top = None;
        let mut len = None;
        for (i, part) in s.split(',').enumerate() {
            let bad = |reason: &str| ParseError::Token {
                token: part.to_string(),
                index: i + 1,
                reason: reason.to_string(),
            };
            let (key, value) = part
                .split_once('=')
                .ok_or_else(|| bad("expected key=value"))?;
            let value = value
                .trim()
                .parse::<usize>()
                .map_err(|e| bad(&e.to_string()))?;
            match key.trim() {
                "top" => top = Some(value),
                "len" => len = Some(value),
                _ => return Err(bad("expected top or len")),
            }
        }
        match (top, len) {
            (Some(top), Some(len)) => Ok(ModuleSpec { top, len }),
            _ => Err(ParseError::Malformed {
                input: s.to_string(),
                reason: "expected \"top=T,len=L\"".into(),
            }),
        }
    }
}

pub fn make_module(a: &Algebra, top: usize, len: usize) -> Result<UniserialModule, ModuleError> {
    if top < 1 || top > a.rank() {
        return Err(ModuleError::InvalidVertex {
            top,
            rank: a.rank(),
        });
    }
    let max = a.proj_len(top);
    if len < 1 || len > max {
        return Err(ModuleError::InvalidLength { top, len, max });
    }
    Ok(UniserialModule { top, len })
}

pub fn simple(a: &Algebra, v: usize) -> UniserialModule {
    UniserialModule {
        top: a.wrap(v),
        len: 1,
    }
}

pub fn projective(a: &Algebra, v: usize) -> UniserialModule {
    let top = a.wrap(v);
    UniserialModule {
        top,
        len: a.proj_len(top),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Syzygy {
    Zero,
    Module(UniserialModule),
}

impl Syzygy {
    pub fn module(self) -> Option<UniserialModule> {
        match self {
            Syzygy::Zero => None,
            Syzygy::Module(m) => Some(m),
        }
    }

    /// Applies `Ω` once more; the syzygy of zero is zero.
    pub fn next(self, a: &Algebra) -> Syzygy {
        match self {
            Syzygy::Zero => Syzygy::Zero,
            Syzygy::Module(m) => syzygy(a, &m),
        }
    }

    pub fn is_zero_or_projective(self, a: &Algebra) -> bool {
        match self {
            Syzygy::Zero => true,
            Syzygy::Module(m) => m.is_projective(a),
        }
    }
}

/// Kernel of the projective cover `P_top ↠ M`: the module starting right below
/// the socle of `M` and ending at the socle of `P_top`.
pub fn syzygy(a: &Algebra, m: &UniserialModule) -> Syzygy {
    let cover = a.proj_len(m.top);
    if m.len == cover {
        return Syzygy::Zero;
    }
    Syzygy::Module(UniserialModule {
        top: a.wrap(m.top + m.len),
        len: cover - m.len,
    })
}

/// `Ω^k(M)`.
pub fn syzygy_power(a: &Algebra, m: &UniserialModule, k: usize) -> Syzygy {
    (0..k).fold(Syzygy::Module(*m), |s, _| s.next(a))
}

/// The forward orbit `M, ΩM, Ω²M, …` up to zero or the first repetition.
///
/// When the orbit dies, `visited` holds every nonzero term, `period` is `None`
/// and `preperiod == visited.len()`, so `Ω^preperiod(M) = 0`. Otherwise
/// `visited[preperiod..preperiod + period]` is the cycle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitInfo {
    pub preperiod: usize,
    pub period: Option<usize>,
    pub visited: Vec<UniserialModule>,
}

impl OrbitInfo {
    pub fn cycle(&self) -> &[UniserialModule] {
        match self.period {
            Some(p) => &self.visited[self.preperiod..self.preperiod + p],
            None => &[],
        }
    }
}

pub fn syzygy_orbit(a: &Algebra, m: &UniserialModule) -> OrbitInfo {
    let mut seen: HashMap<UniserialModule, usize> = HashMap::new();
    let mut visited = Vec::new();
    let mut cur = *m;
    loop {
        if let Some(&at) = seen.get(&cur) {
            return OrbitInfo {
                preperiod: at,
                period: Some(visited.len() - at),
                visited,
            };
        }
        seen.insert(cur, visited.len());
        visited.push(cur);
        match syzygy(a, &cur) {
            Syzygy::Module(next) => cur = next,
            Syzygy::Zero => {
                return OrbitInfo {
                    preperiod: visited.len(),
                    period: None,
                    visited,
                }
            }
        }
    }
}

/// Projective dimension: the number of syzygy steps until a projective term.
pub fn pdim(a: &Algebra, m: &UniserialModule) -> Dim {
    let orbit = syzygy_orbit(a, m);
    match orbit.period {
        Some(_) => Dim::Infinite,
        None => Dim::Finite(orbit.visited.len() - 1),
    }
}

/// `Ω^t(M) = M` for some `t ≥ 1`.
pub fn is_periodic(a: &Algebra, m: &UniserialModule) -> bool {
    let orbit = syzygy_orbit(a, m);
    orbit.period.is_some() && orbit.preperiod == 0
}

/// All indecomposables, ordered by top and then by length.
pub fn indecomposables(a: &Algebra) -> Vec<UniserialModule> {
    (1..=a.rank())
        .flat_map(|top| (1..=a.proj_len(top)).map(move |len| UniserialModule { top, len }))
        .collect()
}

pub fn is_injective(a: &Algebra, m: &UniserialModule) -> bool {
    m.len == injective_lengths(a)[m.socle(a) - 1]
}

/// Dense indexing of the indecomposables of one algebra, in the order of
/// [`indecomposables`].
#[derive(Debug, Clone)]
pub struct ModuleTable {
    offsets: Vec<usize>,
    modules: Vec<UniserialModule>,
}

impl ModuleTable {
    pub fn new(a: &Algebra) -> Self {
        let mut offsets = Vec::with_capacity(a.rank() + 1);
        let mut acc = 0;
        for &c in a.lengths() {
            offsets.push(acc);
            acc += c;
        }
        offsets.push(acc);
        ModuleTable {
            offsets,
            modules: indecomposables(a),
        }
    }

    pub fn len(&self) -> usize {
        self.modules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.modules.is_empty()
    }

    pub fn index(&self, m: &UniserialModule) -> usize {
        self.offsets[m.top - 1] + m.len - 1
    }

    pub fn module(&self, idx: usize) -> UniserialModule {
        self.modules[idx]
    }

    pub fn modules(&self) -> &[UniserialModule] {
        &self.modules
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(c: &[usize]) -> Algebra {
        Algebra::new(c.to_vec()).unwrap()
    }

    fn m(top: usize, len: usize) -> UniserialModule {
        UniserialModule { top, len }
    }

    #[test]
    fn module_construction() {
        let a = alg(&[3, 4, 3, 3, 2]);
        let p2 = make_module(&a, 2, 4).unwrap();
        assert!(p2.is_projective(&a));
        assert_eq!(p2.composition_series(&a), vec![2, 3, 4, 5]);
        assert_eq!(make_module(&alg(&[2, 2]), 1, 1).unwrap(), m(1, 1));
        assert_eq!(
            make_module(&alg(&[3, 2, 2]), 2, 3),
            Err(ModuleError::InvalidLength {
                top: 2,
                len: 3,
                max: 2
            })
        );
        assert!(make_module(&a, 6, 1).is_err());
        assert!(make_module(&a, 1, 0).is_err());
    }

    #[test]
    fn syzygies() {
        // P_1 = [1,2,3] ↠ S_1 has kernel [2,3]
        assert_eq!(
            syzygy(&alg(&[3, 4, 3, 3, 2]), &m(1, 1)),
            Syzygy::Module(m(2, 2))
        );
        assert_eq!(syzygy(&alg(&[2, 2]), &m(1, 1)), Syzygy::Module(m(2, 1)));
        assert_eq!(syzygy(&alg(&[3, 2, 2]), &m(3, 2)), Syzygy::Zero);
        assert_eq!(Syzygy::Zero.next(&alg(&[2, 2])), Syzygy::Zero);
    }

    #[test]
    fn orbits() {
        let o = syzygy_orbit(&alg(&[3, 3, 2]), &m(1, 1));
        assert_eq!(o.preperiod, 0);
        assert_eq!(o.period, Some(2));
        assert_eq!(o.cycle(), &[m(1, 1), m(2, 2)]);

        // (2,1) → (3,1) → (1,1) → (2,2) = P_2 → 0
        let o = syzygy_orbit(&alg(&[3, 2, 2]), &m(2, 1));
        assert_eq!(o.period, None);
        assert_eq!(o.visited, vec![m(2, 1), m(3, 1), m(1, 1), m(2, 2)]);
        assert_eq!(o.preperiod, 4);

        let o = syzygy_orbit(&alg(&[2, 2]), &m(1, 1));
        assert_eq!((o.preperiod, o.period), (0, Some(2)));
    }

    #[test]
    fn projective_dimensions() {
        assert_eq!(pdim(&alg(&[3, 2, 2]), &m(2, 1)), Dim::Finite(3));
        assert_eq!(pdim(&alg(&[3, 3, 2]), &m(1, 1)), Dim::Infinite);
        assert_eq!(pdim(&alg(&[3, 4, 3, 3, 2]), &m(4, 3)), Dim::Finite(0));
    }

    #[test]
    fn periodicity() {
        let a = alg(&[3, 3, 2]);
        assert!(is_periodic(&a, &m(1, 1)));
        assert!(!is_periodic(&a, &m(3, 1)));
        for p in (1..=3).map(|v| projective(&a, v)) {
            assert!(!is_periodic(&a, &p));
        }
    }

    #[test]
    fn inventory() {
        assert_eq!(indecomposables(&alg(&[2, 2])).len(), 4);
        assert_eq!(indecomposables(&alg(&[3, 2, 2])).len(), 7);
        assert_eq!(indecomposables(&alg(&[3, 4, 3, 3, 2])).len(), 15);
        let a = alg(&[3, 4, 3, 3, 2]);
        let table = ModuleTable::new(&a);
        for (i, x) in indecomposables(&a).iter().enumerate() {
            assert_eq!(table.index(x), i);
            assert_eq!(table.module(i), *x);
        }
    }

    #[test]
    fn injectivity() {
        assert!(is_injective(&alg(&[3, 3, 2]), &m(1, 3)));
        let a = alg(&[2, 2]);
        assert!(is_injective(&a, &m(1, 2)) && is_injective(&a, &m(2, 2)));
        assert!(!is_injective(&alg(&[3, 2, 2]), &m(1, 1)));
    }

    #[test]
    fn module_spec_text() {
        assert_eq!(
            "top=2,len=4".parse::<ModuleSpec>().unwrap(),
            ModuleSpec { top: 2, len: 4 }
        );
        assert!("top=2".parse::<ModuleSpec>().is_err());
        assert!("top=2,size=4".parse::<ModuleSpec>().is_err());
        assert!("top=x,len=4".parse::<ModuleSpec>().is_err());
    }
}
