//! Algebra-level invariants: global and finitistic dimension, the
//! Igusa–Todorov φ-dimension and the delooping level.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::Algebra;
use crate::rank::integer_rank;
use crate::uniserial::{
    indecomposables, pdim, simple, syzygy, ModuleTable, Syzygy, UniserialModule,
};
use crate::Dim;

/// The syzygy operator `L[M] = [ΩM]` on the stable Grothendieck group.
///
/// The basis is the set of nonprojective indecomposables. Since `Ω` sends an
/// indecomposable to an indecomposable or to zero (or a projective, which is
/// zero here), `L` is a partial map on basis indices.
#[derive(Debug, Clone)]
pub struct StableK0 {
    basis: Vec<UniserialModule>,
    image: Vec<Option<usize>>,
    position: HashMap<UniserialModule, usize>,
}

impl StableK0 {
    pub fn new(a: &Algebra) -> Self {
        let basis: Vec<UniserialModule> = indecomposables(a)
            .into_iter()
            .filter(|m| !m.is_projective(a))
            .collect();
        let position: HashMap<_, _> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        let image = basis
            .iter()
            .map(|m| match syzygy(a, m) {
                Syzygy::Module(x) => position.get(&x).copied(),
                Syzygy::Zero => None,
            })
            .collect();
        StableK0 {
            basis,
            image,
            position,
        }
    }

    pub fn basis(&self) -> &[UniserialModule] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis index of `m`, or `None` if `m` is projective.
    pub fn index_of(&self, m: &UniserialModule) -> Option<usize> {
        self.position.get(m).copied()
    }

    /// `L` applied to the basis vector `i`.
    pub fn apply(&self, i: usize) -> Option<usize> {
        self.image[i]
    }

    /// Square matrix of `L`; column `j` is the coordinate vector of `L e_j`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let k = self.dim();
        let mut m = vec![vec![0; k]; k];
        for (j, img) in self.image.iter().enumerate() {
            if let Some(i) = img {
                m[*i][j] = 1;
            }
        }
        m
    }

    /// Number of applications of `L` after which every basis vector has either
    /// vanished or entered its cycle. `L` permutes cycle vectors, so ranks of
    /// iterated images are constant from here on.
    pub fn horizon(&self) -> usize {
        (0..self.dim())
            .map(|start| {
                let mut seen = HashMap::new();
                let mut cur = Some(start);
                let mut steps = 0;
                while let Some(i) = cur {
                    if let Some(&first) = seen.get(&i) {
                        return first;
                    }
                    seen.insert(i, steps);
                    cur = self.image[i];
                    steps += 1;
                }
                steps
            })
            .max()
            .unwrap_or(0)
    }

    /// `rank L^t ⟨family⟩` for `t = 0..=horizon`.
    pub fn rank_sequence(&self, family: &[usize]) -> Vec<usize> {
        let horizon = self.horizon();
        let k = self.dim();
        let mut cur: Vec<Option<usize>> = family.iter().map(|&i| Some(i)).collect();
        let mut ranks = Vec::with_capacity(horizon + 1);
        for _ in 0..=horizon {
            let rows: Vec<Vec<i64>> = cur
                .iter()
                .map(|pos| {
                    let mut row = vec![0; k];
                    if let Some(i) = pos {
                        row[*i] = 1;
                    }
                    row
                })
                .collect();
            ranks.push(integer_rank(&rows));
            for pos in cur.iter_mut() {
                *pos = pos.and_then(|i| self.image[i]);
            }
        }
        ranks
    }

    /// φ of the module whose nonprojective summands are the basis vectors in
    /// `family`.
    pub fn phi_of_family(&self, family: &[usize]) -> usize {
        let ranks = self.rank_sequence(family);
        let last = *ranks.last().expect("rank sequence is never empty");
        ranks
            .iter()
            .position(|&r| r == last)
            .expect("last rank occurs")
    }
}

/// φ of `⊕ G`. Projective members and repeats are ignored.
pub fn phi_of_set(a: &Algebra, modules: &[UniserialModule]) -> usize {
    let k0 = StableK0::new(a);
    phi_of_set_in(&k0, modules)
}

fn family_of(k0: &StableK0, modules: &[UniserialModule]) -> Vec<usize> {
    let mut family: Vec<usize> = modules.iter().filter_map(|m| k0.index_of(m)).collect();
    family.sort_unstable();
    family.dedup();
    family
}

fn phi_of_set_in(k0: &StableK0, modules: &[UniserialModule]) -> usize {
    k0.phi_of_family(&family_of(k0, modules))
}

/// `rank L^t ⟨add ⊕G⟩` for `t` up to the stabilization horizon.
pub fn rank_sequence(a: &Algebra, modules: &[UniserialModule]) -> Vec<usize> {
    let k0 = StableK0::new(a);
    k0.rank_sequence(&family_of(&k0, modules))
}

/// φ-dimension, computed as φ of the direct sum of all indecomposables.
pub fn phi_dim(a: &Algebra) -> usize {
    let k0 = StableK0::new(a);
    let all: Vec<usize> = (0..k0.dim()).collect();
    k0.phi_of_family(&all)
}

/// Maximum of φ over every subset of nonprojective indecomposables.
///
/// Exponential in the number of nonprojectives; for cross-checking
/// [`phi_dim`] on tiny algebras only.
pub fn phi_dim_over_subsets(a: &Algebra) -> usize {
    let k0 = StableK0::new(a);
    let k = k0.dim();
    assert!(k < 31, "subset search over {k} modules is too large");
    (0u32..1 << k)
        .map(|mask| {
            let family: Vec<usize> = (0..k).filter(|i| mask >> i & 1 == 1).collect();
            k0.phi_of_family(&family)
        })
        .max()
        .unwrap_or(0)
}

/// `(gldim, findim)`. The global dimension is the largest projective dimension
/// of a simple; the finitistic dimension the largest finite projective
/// dimension of any indecomposable.
pub fn gldim_findim(a: &Algebra) -> (Dim, usize) {
    let gldim = (1..=a.rank())
        .map(|v| pdim(a, &simple(a, v)))
        .max()
        .unwrap_or(Dim::Finite(0));
    let findim = indecomposables(a)
        .iter()
        .filter_map(|m| pdim(a, m).finite())
        .max()
        .unwrap_or(0);
    (gldim, findim)
}

/// The sets `Im_d` of indecomposable nonprojective `d`-th syzygies.
///
/// `Im_0` is every indecomposable and `Im_{d+1} = Ω(Im_d)` with zero and
/// projective images dropped (they are absorbed by the free summand). The
/// sequence is eventually periodic; `sets` runs up to the first repetition.
#[derive(Debug, Clone)]
pub struct ImageSets {
    table: ModuleTable,
    sets: Vec<Vec<bool>>,
    preperiod: usize,
    period: usize,
}

impl ImageSets {
    pub fn new(a: &Algebra) -> Self {
        let table = ModuleTable::new(a);
        let step: Vec<Option<usize>> = table
            .modules()
            .iter()
            .map(|m| match syzygy(a, m) {
                Syzygy::Module(x) if !x.is_projective(a) => Some(table.index(&x)),
                _ => None,
            })
            .collect();
        let mut sets = vec![vec![true; table.len()]];
        let mut first_seen: HashMap<Vec<bool>, usize> = HashMap::new();
        first_seen.insert(sets[0].clone(), 0);
        loop {
            let cur = sets.last().expect("nonempty");
            let mut next = vec![false; table.len()];
            for (i, &present) in cur.iter().enumerate() {
                if let (true, Some(j)) = (present, step[i]) {
                    next[j] = true;
                }
            }
            if let Some(&at) = first_seen.get(&next) {
                let period = sets.len() - at;
                return ImageSets {
                    table,
                    sets,
                    preperiod: at,
                    period,
                };
            }
            first_seen.insert(next.clone(), sets.len());
            sets.push(next);
        }
    }

    pub fn preperiod(&self) -> usize {
        self.preperiod
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Position of `Im_d` among the stored sets.
    pub fn slot(&self, d: usize) -> usize {
        if d < self.sets.len() {
            d
        } else {
            self.preperiod + (d - self.preperiod) % self.period
        }
    }

    pub fn contains(&self, d: usize, m: &UniserialModule) -> bool {
        self.sets[self.slot(d)][self.table.index(m)]
    }

    /// Members of `Im_d`.
    pub fn image(&self, d: usize) -> Vec<UniserialModule> {
        let set = &self.sets[self.slot(d)];
        self.table
            .modules()
            .iter()
            .enumerate()
            .filter(|(i, _)| set[*i])
            .map(|(_, m)| *m)
            .collect()
    }

    /// Delooping level of the indecomposable `m`: the least `d` with
    /// `Ω^d(m)` projective (or zero) or a direct summand of some `Ω^{d+1}(N)`.
    pub fn del(&self, a: &Algebra, m: &UniserialModule) -> Dim {
        let mut seen: HashSet<(Syzygy, usize)> = HashSet::new();
        let mut cur = Syzygy::Module(*m);
        let mut d = 0;
        loop {
            match cur {
                Syzygy::Zero => return Dim::Finite(d),
                Syzygy::Module(x) => {
                    if x.is_projective(a) || self.contains(d + 1, &x) {
                        return Dim::Finite(d);
                    }
                }
            }
            if d + 1 >= self.preperiod && !seen.insert((cur, self.slot(d + 1))) {
                return Dim::Infinite;
            }
            cur = cur.next(a);
            d += 1;
        }
    }
}

pub fn del_module(a: &Algebra, m: &UniserialModule) -> Dim {
    ImageSets::new(a).del(a, m)
}

/// Delooping levels of the simples `S_1, …, S_n`.
pub fn del_per_simple(a: &Algebra) -> Vec<Dim> {
    let images = ImageSets::new(a);
    (1..=a.rank())
        .map(|v| images.del(a, &simple(a, v)))
        .collect()
}

/// Delooping level of the algebra: the maximum over the simples.
pub fn del_algebra(a: &Algebra) -> Dim {
    del_per_simple(a)
        .into_iter()
        .max()
        .unwrap_or(Dim::Finite(0))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionReport {
    pub gldim: Dim,
    pub findim: usize,
    pub phi_dim: usize,
    pub del: Dim,
    /// Per-simple delooping levels; only the direct computation produces them.
    pub del_per_simple: Option<Vec<Dim>>,
}

/// Computes every invariant directly from the module calculus.
pub fn dimension_report(a: &Algebra) -> DimensionReport {
    let (gldim, findim) = gldim_findim(a);
    let per_simple = del_per_simple(a);
    DimensionReport {
        gldim,
        findim,
        phi_dim: phi_dim(a),
        del: per_simple.iter().copied().max().unwrap_or(Dim::Finite(0)),
        del_per_simple: Some(per_simple),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::uniserial::{make_module, projective};

    fn alg(c: &[usize]) -> Algebra {
        Algebra::new(c.to_vec()).unwrap()
    }

    fn m(top: usize, len: usize) -> UniserialModule {
        UniserialModule { top, len }
    }

    #[test]
    fn stable_k0_shape() {
        let a = alg(&[3, 2, 2]);
        let k0 = StableK0::new(&a);
        assert_eq!(k0.basis(), &[m(1, 1), m(1, 2), m(2, 1), m(3, 1)]);
        let l = k0.matrix();
        for j in 0..k0.dim() {
            let col: Vec<i64> = l.iter().map(|row| row[j]).collect();
            assert!(col.iter().filter(|&&x| x != 0).count() <= 1);
            assert!(col.iter().all(|&x| x == 0 || x == 1));
        }
        assert_eq!(k0.dim(), a.total_length() - a.rank());
    }

    #[test]
    fn phi_of_sets() {
        let a = alg(&[3, 2, 2]);
        assert_eq!(rank_sequence(&a, &[m(1, 1)]), vec![1, 0, 0, 0]);
        assert_eq!(phi_of_set(&a, &[m(1, 1)]), 1);
        assert_eq!(
            phi_of_set(&alg(&[2, 2]), &indecomposables(&alg(&[2, 2]))),
            0
        );
        let all = indecomposables(&a);
        assert_eq!(rank_sequence(&a, &all), vec![4, 2, 1, 0]);
        assert_eq!(phi_of_set(&a, &all), 3);
        // projectives vanish in the stable group
        assert_eq!(phi_of_set(&a, &[projective(&a, 1)]), 0);
    }

    #[test]
    fn phi_dimensions() {
        let a = alg(&[3, 3, 2]);
        // horizon is 2: (1,2) → (3,1) → (1,1) enters the 2-cycle {(1,1), (2,2)}
        assert_eq!(rank_sequence(&a, &indecomposables(&a)), vec![5, 3, 2]);
        assert_eq!(phi_dim(&alg(&[3, 3, 2])), 2);
        assert_eq!(phi_dim(&alg(&[2, 2, 2])), 0);
        assert_eq!(phi_dim(&alg(&[3, 2, 2])), 3);
    }

    #[test]
    fn global_and_finitistic() {
        assert_eq!(gldim_findim(&alg(&[3, 4, 3, 3, 2])), (Dim::Infinite, 1));
        assert_eq!(gldim_findim(&alg(&[3, 2, 2])), (Dim::Finite(3), 3));
        assert_eq!(gldim_findim(&alg(&[2, 2])), (Dim::Infinite, 0));
    }

    #[test]
    fn image_sets() {
        let a = alg(&[3, 3, 2]);
        let images = ImageSets::new(&a);
        assert_eq!(images.image(1), vec![m(1, 1), m(2, 2), m(3, 1)]);

        let a = alg(&[2, 2]);
        let images = ImageSets::new(&a);
        for d in 1..6 {
            assert_eq!(images.image(d), vec![m(1, 1), m(2, 1)]);
        }

        let a = alg(&[3, 2, 2]);
        assert!(ImageSets::new(&a).image(4).is_empty());
    }

    #[test]
    fn delooping_levels() {
        let a = alg(&[3, 3, 2]);
        assert_eq!(del_module(&a, &m(1, 1)), Dim::Finite(0));
        assert_eq!(del_module(&a, &m(2, 1)), Dim::Finite(1));
        assert_eq!(
            del_module(&a, &make_module(&a, 2, 2).unwrap()),
            Dim::Finite(0)
        );
        assert_eq!(
            del_per_simple(&a),
            vec![Dim::Finite(0), Dim::Finite(1), Dim::Finite(0)]
        );
        assert_eq!(del_algebra(&a), Dim::Finite(1));
        assert_eq!(del_algebra(&alg(&[2, 2])), Dim::Finite(0));
        assert_eq!(del_algebra(&alg(&[3, 4, 3, 3, 2])), Dim::Finite(1));
    }

    #[test]
    fn report_for_finite_global_dimension() {
        let r = dimension_report(&alg(&[3, 2, 2]));
        assert_eq!(r.gldim, Dim::Finite(3));
        assert_eq!(r.findim, 3);
        assert_eq!(r.phi_dim, 3);
        assert_eq!(r.del, Dim::Finite(3));
    }
}
