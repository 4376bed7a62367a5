//! Syzygy filtrations and the syzygy filtered algebra `ε(Λ)`.
//!
//! Cutting the cycle right after every socle of a projective splits it into
//! the intervals `Δ_1, …, Δ_r` (the set `B(Λ)`). Second and higher syzygies are
//! filtered by these blocks, and the category of `B(Λ)`-filtered modules is
//! the module category of a smaller Nakayama algebra `ε(Λ)`: its vertices are
//! the blocks and its projectives are the projectives of `Λ` with tops in
//! `S'(Λ)`, measured in blocks. Cutting after the relation starts instead gives
//! the dual block set `∇(Λ)`.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::algebra::{is_selfinjective, relations_from_kupisch, Algebra};
use crate::error::{EpsilonError, FiltrationError};
use crate::invariants::{del_algebra, gldim_findim, phi_dim, DimensionReport};
use crate::uniserial::{projective, UniserialModule};
use crate::Dim;

/// Socle indices of the projectives (`{k_2, k_4, …, k_2r}`).
pub fn socle_set(a: &Algebra) -> BTreeSet<usize> {
    (1..=a.rank()).map(|v| a.proj_socle(v)).collect()
}

/// Socle indices shifted by one: the tops of the blocks of `B(Λ)`.
pub fn s_prime_set(a: &Algebra) -> BTreeSet<usize> {
    socle_set(a).into_iter().map(|s| a.wrap(s + 1)).collect()
}

/// Starts of the relations, i.e. the indices of minimal projectives.
pub fn start_set(a: &Algebra) -> BTreeSet<usize> {
    relations_from_kupisch(a).starts().into_iter().collect()
}

/// An interval of the cycle, `top, top+1, …` of length `len`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DeltaBlock {
    pub top: usize,
    pub len: usize,
    /// Position in the list of blocks ordered by top.
    pub ordinal: usize,
}

impl DeltaBlock {
    pub fn socle(&self, a: &Algebra) -> usize {
        a.wrap(self.top + self.len - 1)
    }

    pub fn vertices(&self, a: &Algebra) -> Vec<usize> {
        (0..self.len).map(|k| a.wrap(self.top + k)).collect()
    }
}

/// Blocks obtained by cutting the cycle right after each vertex in `cuts`.
fn cut_after(a: &Algebra, cuts: &BTreeSet<usize>) -> Vec<DeltaBlock> {
    let n = a.rank();
    let cuts: Vec<usize> = cuts.iter().copied().collect();
    let mut blocks: Vec<DeltaBlock> = cuts
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            let next = cuts[(i + 1) % cuts.len()];
            DeltaBlock {
                top: a.wrap(s + 1),
                len: (next + n - s - 1) % n + 1,
                ordinal: 0,
            }
        })
        .collect();
    blocks.sort();
    for (i, b) in blocks.iter_mut().enumerate() {
        b.ordinal = i;
    }
    blocks
}

/// `B(Λ)`: blocks from each `s + 1` down to the next socle index.
pub fn delta_blocks(a: &Algebra) -> Vec<DeltaBlock> {
    cut_after(a, &socle_set(a))
}

/// `∇(Λ)`: blocks from each `k + 1` down to the next relation start.
pub fn nabla_blocks(a: &Algebra) -> Vec<DeltaBlock> {
    cut_after(a, &start_set(a))
}

fn same_intervals(x: &[DeltaBlock], y: &[DeltaBlock]) -> bool {
    x.len() == y.len()
        && x.iter()
            .zip(y)
            .all(|(p, q)| (p.top, p.len) == (q.top, q.len))
}

/// The two combinatorial conditions characterising finitistic dimension one:
/// equal start and socle sets, and `B(Λ) = ∇(Λ)`.
pub fn findim_one_conditions(a: &Algebra) -> (bool, bool) {
    (
        start_set(a) == socle_set(a),
        same_intervals(&delta_blocks(a), &nabla_blocks(a)),
    )
}

/// Whether the relation starts coincide with the projective socles. For a
/// cyclic algebra of infinite global dimension this is `findim Λ = 1`.
pub fn findim_one_test(a: &Algebra) -> bool {
    let (sets, blocks) = findim_one_conditions(a);
    assert_eq!(
        sets, blocks,
        "start/socle equality and B = ∇ disagree for {a}"
    );
    sets
}

/// A decomposition of a module into consecutive blocks, listed top first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Filtration {
    pub blocks: Vec<usize>,
}

impl Filtration {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Glues the blocks back together as `(top, len)`.
    pub fn concat(&self, blocks: &[DeltaBlock]) -> Option<(usize, usize)> {
        let first = blocks.get(*self.blocks.first()?)?;
        let len = self.blocks.iter().map(|&i| blocks[i].len).sum();
        Some((first.top, len))
    }
}

/// Greedy `B(Λ)`-filtration from the top, against a precomputed block list.
pub fn b_filtration_in(
    a: &Algebra,
    blocks: &[DeltaBlock],
    m: &UniserialModule,
) -> Result<Filtration, FiltrationError> {
    let not_filterable = FiltrationError::NotFilterable {
        top: m.top,
        len: m.len,
    };
    let by_top: HashMap<usize, &DeltaBlock> = blocks.iter().map(|b| (b.top, b)).collect();
    let mut top = m.top;
    let mut remaining = m.len;
    let mut used = Vec::new();
    while remaining > 0 {
        let block = by_top.get(&top).ok_or_else(|| not_filterable.clone())?;
        if block.len > remaining {
            return Err(not_filterable);
        }
        used.push(block.ordinal);
        remaining -= block.len;
        top = a.wrap(top + block.len);
    }
    Ok(Filtration { blocks: used })
}

/// The unique `B(Λ)`-filtration of `m`, if it has one.
pub fn b_filtration(a: &Algebra, m: &UniserialModule) -> Result<Filtration, FiltrationError> {
    b_filtration_in(a, &delta_blocks(a), m)
}

/// `ε(Λ)` together with the block each of its vertices stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Epsilon {
    pub algebra: Algebra,
    /// `blocks[j - 1]` is the block of `Λ` behind vertex `j` of `ε(Λ)`.
    pub blocks: Vec<DeltaBlock>,
}

/// Block counts of the projectives `P_t`, `t ∈ S'(Λ)`, in block order.
///
/// This is the Kupisch series of `ε(Λ)` read as a possibly non-cyclic
/// Nakayama algebra.
pub fn epsilon_series(a: &Algebra) -> Result<(Vec<usize>, Vec<DeltaBlock>), EpsilonError> {
    if is_selfinjective(a) {
        return Err(EpsilonError::SelfinjectiveInput);
    }
    let blocks = delta_blocks(a);
    let series = blocks
        .iter()
        .map(|b| {
            b_filtration_in(a, &blocks, &projective(a, b.top))
                .map(|f| f.len())
                .map_err(|e| {
                    EpsilonError::Internal(format!(
                        "projective over a block top is not filtered: {e}"
                    ))
                })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((series, blocks))
}

/// Kupisch condition for an arbitrary (possibly linear or disconnected)
/// Nakayama algebra written around a cycle: `c_i ≥ 1`, `c_{i+1} ≥ c_i − 1`.
pub fn is_nakayama_series(c: &[usize]) -> bool {
    let n = c.len();
    n >= 1 && c.iter().all(|&x| x >= 1) && (0..n).all(|i| c[(i + 1) % n] + 1 >= c[i])
}

pub fn epsilon(a: &Algebra) -> Result<Epsilon, EpsilonError> {
    let (series, blocks) = epsilon_series(a)?;
    if !is_nakayama_series(&series) {
        return Err(EpsilonError::Internal(format!(
            "block counts {series:?} of {a} are not a Kupisch series"
        )));
    }
    match Algebra::new(series.clone()) {
        Ok(algebra) => Ok(Epsilon { algebra, blocks }),
        Err(_) => Err(EpsilonError::NotCyclic { series }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Terminal {
    Selfinjective,
    FiniteGldim,
    /// A level with φ-dimension at most 2 whose `ε` is not selfinjective.
    PhiAtMost2,
}

/// The tower `Λ, ε(Λ), ε²(Λ), …`.
///
/// Levels with φ-dimension at least 3 are always reduced. A level with
/// φ-dimension at most 2 is reduced once more when its `ε` is selfinjective,
/// which ends the tower with [`Terminal::Selfinjective`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TowerReport {
    pub levels: Vec<Algebra>,
    pub phi_dims: Vec<usize>,
    pub depth: usize,
    pub terminal: Terminal,
}

impl TowerReport {
    /// Index of the level with φ-dimension at most 2 that ends an
    /// infinite-global-dimension tower, if there is one.
    pub fn base_level(&self) -> Option<usize> {
        match self.terminal {
            Terminal::Selfinjective if self.depth > 0 => Some(self.depth - 1),
            Terminal::PhiAtMost2 => Some(self.depth),
            _ => None,
        }
    }
}

pub fn epsilon_tower(a: &Algebra) -> Result<TowerReport, EpsilonError> {
    let cap = a.rank();
    let mut levels = vec![a.clone()];
    let mut phi_dims = Vec::new();
    let terminal = loop {
        let cur = levels.last().expect("nonempty").clone();
        if is_selfinjective(&cur) {
            phi_dims.push(0);
            break Terminal::Selfinjective;
        }
        let phi = phi_dim(&cur);
        phi_dims.push(phi);
        if gldim_findim(&cur).0.is_finite() {
            break Terminal::FiniteGldim;
        }
        if levels.len() > cap {
            return Err(EpsilonError::Internal(format!(
                "tower of {a} exceeded {cap} levels"
            )));
        }
        if phi >= 3 {
            levels.push(epsilon(&cur)?.algebra);
            continue;
        }
        match epsilon(&cur) {
            Ok(e) if is_selfinjective(&e.algebra) => {
                levels.push(e.algebra);
                phi_dims.push(0);
                break Terminal::Selfinjective;
            }
            _ => break Terminal::PhiAtMost2,
        }
    };
    Ok(TowerReport {
        depth: levels.len() - 1,
        levels,
        phi_dims,
        terminal,
    })
}

/// Finitistic dimension, φ-dimension and delooping level read off the tower.
///
/// Each reduction step adds 2. At the bottom, a finite-global-dimension level
/// has all invariants equal to its global dimension; a level with φ-dimension
/// 2 has finitistic dimension 1 or 2 according to [`findim_one_test`], and its
/// delooping level is computed directly.
pub fn invariants_via_tower(a: &Algebra) -> Result<DimensionReport, EpsilonError> {
    let tower = epsilon_tower(a)?;
    if let Some(base) = tower.base_level() {
        let level = &tower.levels[base];
        let lift = 2 * base;
        let findim = if findim_one_test(level) { 1 } else { 2 };
        let del = match del_algebra(level) {
            Dim::Finite(d) => Dim::Finite(d + lift),
            Dim::Infinite => Dim::Infinite,
        };
        return Ok(DimensionReport {
            gldim: Dim::Infinite,
            findim: findim + lift,
            phi_dim: tower.phi_dims[base] + lift,
            del,
            del_per_simple: None,
        });
    }
    match tower.terminal {
        Terminal::Selfinjective => Ok(DimensionReport {
            gldim: Dim::Infinite,
            findim: 0,
            phi_dim: 0,
            del: Dim::Finite(0),
            del_per_simple: None,
        }),
        Terminal::FiniteGldim if tower.depth == 0 => {
            let (gldim, _) = gldim_findim(a);
            let g = gldim.finite().expect("finite global dimension");
            Ok(DimensionReport {
                gldim,
                findim: g,
                phi_dim: g,
                del: Dim::Finite(g),
                del_per_simple: None,
            })
        }
        _ => Err(EpsilonError::Internal(format!(
            "unexpected tower end {:?} at depth {} for {a}",
            tower.terminal, tower.depth
        ))),
    }
}
