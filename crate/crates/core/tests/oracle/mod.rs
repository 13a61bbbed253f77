//! Brute-force finite-group computations on explicit element lists, shared
//! by the integration tests. Nothing here uses the library's subgroup,
//! table-of-marks or G-set code; only `Perm` arithmetic.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, VecDeque};

use num_bigint::BigInt;
use segal_core::burnside::TableOfMarks;
use segal_core::groups::{Perm, PermGroup};

pub type Set = BTreeSet<usize>;

pub struct Group {
    pub elems: Vec<Perm>,
    index: HashMap<Perm, usize>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Group {
    /// Closure of the given generators by breadth-first search.
    pub fn generated(degree: usize, gens: &[Perm]) -> Group {
        let id = Perm::identity(degree);
        let mut elems = vec![id.clone()];
        let mut index = HashMap::from([(id, 0usize)]);
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for g in gens {
                let y = elems[i].compose(g);
                if !index.contains_key(&y) {
                    index.insert(y.clone(), elems.len());
                    queue.push_back(elems.len());
                    elems.push(y);
                }
            }
        }
        let n = elems.len();
        let mul: Vec<Vec<usize>> =
            (0..n).map(|a| (0..n).map(|b| index[&elems[a].compose(&elems[b])]).collect()).collect();
        let inv = (0..n).map(|a| index[&elems[a].inverse()]).collect();
        Group { elems, index, mul, inv }
    }

    pub fn of(g: &PermGroup) -> Group {
        Group::generated(g.degree(), g.generators())
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn idx(&self, p: &Perm) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn set_of(&self, perms: &[Perm]) -> Set {
        perms.iter().map(|p| self.idx(p).expect("element of the group")).collect()
    }

    pub fn closure(&self, gens: &[usize]) -> Set {
        let mut set = Set::from([0]);
        let mut queue: VecDeque<usize> = VecDeque::from([0]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul[x][g];
                if set.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        set
    }

    pub fn conjugate(&self, x: usize, s: &Set) -> Set {
        s.iter().map(|&h| self.mul[self.mul[x][h]][self.inv[x]]).collect()
    }

    /// Every subgroup, as the closure of at most two elements (enough for
    /// all groups used in the tests).
    pub fn subgroups(&self) -> Vec<Set> {
        let n = self.order();
        let mut all: BTreeSet<Set> = BTreeSet::new();
        for a in 0..n {
            for b in a..n {
                all.insert(self.closure(&[a, b]));
            }
        }
        all.into_iter().collect()
    }

    /// Conjugacy classes of subgroups, each a sorted list of members.
    pub fn subgroup_classes(&self) -> Vec<Vec<Set>> {
        let mut left: BTreeSet<Set> = self.subgroups().into_iter().collect();
        let mut classes = Vec::new();
        while let Some(s) = left.iter().next().cloned() {
            let class: BTreeSet<Set> = (0..self.order()).map(|x| self.conjugate(x, &s)).collect();
            for c in &class {
                left.remove(c);
            }
            classes.push(class.into_iter().collect::<Vec<_>>());
        }
        classes.sort_by_key(|c| c[0].len());
        classes
    }

    pub fn are_conjugate_in(&self, within: &Set, a: &Set, b: &Set) -> bool {
        a.len() == b.len() && within.iter().any(|&x| &self.conjugate(x, a) == b)
    }

    /// Left cosets `xH`, as a list of sets.
    pub fn cosets(&self, h: &Set) -> Vec<Set> {
        let mut seen = vec![false; self.order()];
        let mut out = Vec::new();
        for x in 0..self.order() {
            if seen[x] {
                continue;
            }
            let c: Set = h.iter().map(|&y| self.mul[x][y]).collect();
            for &y in &c {
                seen[y] = true;
            }
            out.push(c);
        }
        out
    }

    /// `|(G/H)^K|`: cosets `xH` with `kxH = xH` for all `k ∈ K`.
    pub fn mark(&self, h: &Set, k: &Set) -> i64 {
        self.cosets(h)
            .iter()
            .filter(|c| {
                let x = *c.iter().next().unwrap();
                k.iter().all(|&g| c.contains(&self.mul[g][x]))
            })
            .count() as i64
    }
}

/// A finite `K`-set given by point images under each element of `within`.
pub struct Action {
    pub points: usize,
    /// `act[g][x]` for every element `g` of the ambient group.
    pub act: Vec<Vec<usize>>,
}

impl Action {
    /// `G` (or a subgroup) acting on the cosets `G/L` by left multiplication.
    pub fn on_cosets(g: &Group, l: &Set) -> Action {
        let cosets = g.cosets(l);
        let mut where_: HashMap<usize, usize> = HashMap::new();
        for (i, c) in cosets.iter().enumerate() {
            for &x in c {
                where_.insert(x, i);
            }
        }
        let act = (0..g.order())
            .map(|a| cosets.iter().map(|c| where_[&g.mul[a][*c.iter().next().unwrap()]]).collect())
            .collect();
        Action { points: cosets.len(), act }
    }

    pub fn product(&self, other: &Action) -> Action {
        let n = other.points;
        let act = self
            .act
            .iter()
            .zip(&other.act)
            .map(|(a, b)| (0..self.points * n).map(|p| a[p / n] * n + b[p % n]).collect())
            .collect();
        Action { points: self.points * n, act }
    }

    /// Orbits of the elements in `within`, each with its stabilizer.
    pub fn orbits(&self, within: &Set) -> Vec<Set> {
        let mut seen = vec![false; self.points];
        let mut stabs = Vec::new();
        for start in 0..self.points {
            if seen[start] {
                continue;
            }
            let mut stack = vec![start];
            seen[start] = true;
            while let Some(p) = stack.pop() {
                for &g in within {
                    let q = self.act[g][p];
                    if !seen[q] {
                        seen[q] = true;
                        stack.push(q);
                    }
                }
            }
            stabs.push(within.iter().copied().filter(|&g| self.act[g][start] == start).collect());
        }
        stabs
    }
}

/// The table's class representatives as sets of ambient element indices.
pub fn class_sets(g: &Group, tom: &TableOfMarks) -> Vec<Set> {
    tom.classes().iter().map(|c| g.set_of(c.representative.elements())).collect()
}

/// Coefficients of a `K`-set in the basis of `tom` (the table of `K`),
/// counting orbits by the conjugacy class of their stabilizers in `K`.
pub fn decompose(g: &Group, k: &Set, tom: &TableOfMarks, action: &Action) -> Vec<BigInt> {
    let reps = class_sets(g, tom);
    let mut coeffs = vec![BigInt::from(0); reps.len()];
    for stab in action.orbits(k) {
        let j = reps
            .iter()
            .position(|r| g.are_conjugate_in(k, &stab, r))
            .expect("stabilizer matches a class");
        coeffs[j] += 1;
    }
    coeffs
}

/// The brute-force marks matrix in the table's class order.
pub fn marks_matrix(g: &Group, tom: &TableOfMarks) -> Vec<Vec<i64>> {
    let reps = class_sets(g, tom);
    reps.iter().map(|h| reps.iter().map(|k| g.mark(h, k)).collect()).collect()
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    if m == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..m {
        for rest in permutations(m - 1) {
            let mut p = vec![first];
            p.extend(rest.into_iter().map(|x| if x >= first { x + 1 } else { x }));
            out.push(p);
        }
    }
    out
}

/// Tabulates the homomorphism `K → H` sending generator `j` of `k` to
/// `images[j]`, by walking words; `None` if it is not well defined.
pub fn tabulate(k: &Group, h: &Group, gens: &[Perm], images: &[Perm]) -> Option<Vec<usize>> {
    let mut map: Vec<Option<usize>> = vec![None; k.order()];
    // the identity is element 0 of every `Group`
    map[0] = Some(0);
    let mut stack = vec![0];
    while let Some(x) = stack.pop() {
        let y = map[x]?;
        for (g, img) in gens.iter().zip(images) {
            let (gx, gy) = (k.mul[k.idx(g)?][x], h.mul[h.idx(img)?][y]);
            match map[gx] {
                None => {
                    map[gx] = Some(gy);
                    stack.push(gx);
                }
                Some(z) if z != gy => return None,
                Some(_) => {}
            }
        }
    }
    map.into_iter().collect()
}

/// `K` acting on `S_m` (or on `S_m / P`, cosets `σP`) by `k·σ = ρ(f(k))∘σ`,
/// where `ρ` is left multiplication of `H` on `m/|H|` copies of itself.
pub fn symmetric_action(k: &Group, h: &Group, f: &[usize], m: usize, p: Option<&[Vec<usize>]>) -> Action {
    let n = h.order();
    let rho = |x: usize, s: usize| (s / n) * n + h.mul[x][s % n];
    let perms = permutations(m);
    let index: HashMap<Vec<usize>, usize> = perms.iter().cloned().enumerate().map(|(i, q)| (q, i)).collect();
    // coset label of σ: the least index in σP
    let label: Vec<usize> = match p {
        None => (0..perms.len()).collect(),
        Some(p) => perms
            .iter()
            .map(|s| p.iter().map(|q| index[&q.iter().map(|&i| s[i]).collect::<Vec<_>>()]).min().unwrap())
            .collect(),
    };
    let mut labels: Vec<usize> = label.clone();
    labels.sort_unstable();
    labels.dedup();
    let point: HashMap<usize, usize> = labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
    let act = (0..k.order())
        .map(|a| {
            labels
                .iter()
                .map(|&l| {
                    let moved: Vec<usize> = perms[l].iter().map(|&i| rho(f[a], i)).collect();
                    point[&label[index[&moved]]]
                })
                .collect()
        })
        .collect();
    Action { points: labels.len(), act }
}
