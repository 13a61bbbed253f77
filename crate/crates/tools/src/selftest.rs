//! Embedded invariant suites, runnable from the command line.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use segal_core::burnside::{double_coset_formula, induction, restriction, BurnsideElement, GSet, MarkVector, TableOfMarks};
use segal_core::completion::{IdealTower, ModuleMap, RingModule};
use segal_core::groups::parse_group;
use segal_core::promod::{pro_exactness_check, pro_iso_check, StrictMorphism};
use segal_core::segal::{
    build_sm, check_condition3, restriction_compatibility_check, BuildOptions, ConditionOptions, FamilyDiagram,
};
use segal_core::zlattice::{FgAbelianGroup, IntMatrix};

use crate::report::num;

pub const SUITES: &[&str] = &["marks", "ghost", "integrality", "spectrum", "mackey", "promod", "completion", "segal"];

const GROUPS: &[&str] = &["C2", "C3", "C4", "C6", "S3", "D4", "D8", "Q8", "A4"];

/// Deliberate corruption for checking that the suites notice.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Fault {
    /// One wrong mark in the tables used by the integrality suite.
    CorruptMarks,
}

#[derive(Clone, Debug)]
pub struct SuiteResult {
    pub name: &'static str,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.name,
            "status": if self.passed() { "pass" } else { "fail" },
            "checks": num(self.checks),
            "failures": self.failures,
        })
    }
}

struct Checker {
    result: SuiteResult,
}

impl Checker {
    fn new(name: &'static str) -> Self {
        Checker { result: SuiteResult { name, checks: 0, failures: Vec::new() } }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.result.checks += 1;
        if !ok {
            self.result.failures.push(what());
        }
    }

    fn ok<T, E: std::fmt::Display>(&mut self, r: Result<T, E>, what: &str) -> Option<T> {
        match r {
            Ok(v) => Some(v),
            Err(e) => {
                self.result.checks += 1;
                self.result.failures.push(format!("{what}: {e}"));
                None
            }
        }
    }
}

/// Runs the named suites (all when `only` is empty) in a fixed order.
pub fn run_suites(only: &[String], seed: u64, fault: Option<Fault>) -> Result<Vec<SuiteResult>, String> {
    if let Some(bad) = only.iter().find(|s| !SUITES.contains(&s.as_str())) {
        return Err(format!("unknown suite `{bad}`; known suites: {}", SUITES.join(", ")));
    }
    let mut out = Vec::new();
    for &name in SUITES {
        if !only.is_empty() && !only.iter().any(|s| s == name) {
            continue;
        }
        let mut c = Checker::new(name);
        match name {
            "marks" => marks(&mut c),
            "ghost" => ghost(&mut c, seed),
            "integrality" => integrality(&mut c, fault),
            "spectrum" => spectrum(&mut c),
            "mackey" => mackey(&mut c),
            "promod" => promod(&mut c),
            "completion" => completion(&mut c),
            "segal" => segal(&mut c, seed),
            _ => unreachable!(),
        }
        out.push(c.result);
    }
    Ok(out)
}

fn tables() -> Vec<(&'static str, TableOfMarks)> {
    GROUPS.iter().map(|&s| (s, TableOfMarks::new(parse_group(s).expect("preset")))).collect()
}

fn coset_sets(t: &TableOfMarks) -> Vec<GSet> {
    t.classes().iter().map(|c| GSet::cosets(t.group(), &c.representative).expect("subgroup").0).collect()
}

/// Marks against fixed points counted element by element.
fn marks(c: &mut Checker) {
    for (name, t) in tables() {
        let g = t.group();
        for (i, set) in coset_sets(&t).iter().enumerate() {
            for (j, class) in t.classes().iter().enumerate() {
                let idx: Vec<usize> = class.representative.elements().iter().map(|p| g.index_of(p).unwrap()).collect();
                let fixed = (0..set.size()).filter(|&x| idx.iter().all(|&h| set.act(h, x) == x)).count();
                c.check(fixed as i64 == t.mark(i, j), || format!("{name}: mark({i},{j})"));
            }
        }
    }
}

/// Ghost multiplication against decomposed product sets, on basis pairs
/// and on random combinations.
fn ghost(c: &mut Checker, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (name, t) in tables() {
        let sets = coset_sets(&t);
        let n = t.len();
        let mut table = vec![vec![t.zero(); n]; n];
        for i in 0..n {
            for j in 0..n {
                let Some(direct) = c.ok(sets[i].product(&sets[j]).decompose(&t), name) else { return };
                let Some(ghost) = c.ok(t.multiply(&t.basis(i), &t.basis(j)), name) else { return };
                c.check(direct == ghost, || format!("{name}: [{i}]·[{j}]"));
                table[i][j] = direct;
            }
        }
        for _ in 0..4 {
            let x: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let y: Vec<i64> = (0..n).map(|_| rng.gen_range(-3..=3)).collect();
            let mut expect = t.zero();
            for i in 0..n {
                for j in 0..n {
                    expect = expect.add(&table[i][j].scale(&BigInt::from(x[i] * y[j])));
                }
            }
            let got = t.multiply(&BurnsideElement::from_i64(&x), &BurnsideElement::from_i64(&y));
            c.check(got.as_ref() == Ok(&expect), || format!("{name}: random product {x:?}·{y:?}"));
        }
    }
}

/// Fixed-point vectors of honest sets must solve integrally back to their
/// orbit decomposition.
fn integrality(c: &mut Checker, fault: Option<Fault>) {
    for (name, mut t) in tables() {
        if fault == Some(Fault::CorruptMarks) && t.len() > 1 {
            let v = t.mark(1, 1);
            t.set_mark_unchecked(1, 1, v + 1);
        }
        let sets = coset_sets(&t);
        for (i, a) in sets.iter().enumerate() {
            for (j, b) in sets.iter().enumerate().skip(i) {
                let set = a.product(b);
                let decomposed = set.decompose(&t);
                let solved = t.from_marks(&set.marks(&t));
                c.check(solved.is_ok() && solved == decomposed, || format!("{name}: [{i}]×[{j}] does not solve integrally"));
            }
        }
        let bogus = MarkVector { values: (0..t.len()).map(|j| BigInt::from(j as i64 + 1)).collect() };
        if t.len() > 1 {
            c.check(t.from_marks(&bogus).is_err(), || format!("{name}: non-ghost vector accepted"));
        }
    }
}

/// Dress's classification against a brute-force comparison of character
/// congruences on the basis.
fn spectrum(c: &mut Checker) {
    for (name, t) in tables() {
        let n = t.len();
        let chars: Vec<Vec<BigInt>> = (0..n).map(|k| (0..n).map(|i| t.character(&t.basis(i), k)).collect()).collect();
        for p in [0u64, 2, 3, 5] {
            let Some(blocks) = c.ok(t.spectrum(&[p]), name) else { return };
            let block_of = |k: usize| blocks.iter().position(|b| b.iter().any(|l| l.class == k)).unwrap();
            for k in 0..n {
                for l in 0..n {
                    let brute = chars[k].iter().zip(&chars[l]).all(|(a, b)| {
                        if p == 0 { a == b } else { (a - b) % BigInt::from(p) == BigInt::from(0) }
                    });
                    c.check(brute == (block_of(k) == block_of(l)), || format!("{name}: labels ({k},{p}) ({l},{p})"));
                }
            }
        }
    }
}

fn mackey(c: &mut Checker) {
    for name in ["S3", "D4", "A4"] {
        let g = TableOfMarks::new(parse_group(name).unwrap());
        let subs: Vec<TableOfMarks> = g.classes().iter().map(|k| TableOfMarks::new(k.representative.to_group())).collect();
        for h in &subs {
            for i in 0..h.len() {
                let Some(up) = c.ok(induction(h, &h.basis(i), &g), name) else { return };
                for j in 0..g.len() {
                    let lhs = restriction(&g, &g.basis(j), h)
                        .and_then(|r| h.multiply(&h.basis(i), &r))
                        .and_then(|x| induction(h, &x, &g));
                    let rhs = g.multiply(&up, &g.basis(j));
                    c.check(lhs.is_ok() && lhs == rhs, || format!("{name}: Frobenius at class {i}, basis {j}"));
                }
                for k in &subs {
                    let direct = restriction(&g, &up, k);
                    let formula = double_coset_formula(&g, h, k, &h.basis(i));
                    c.check(direct.is_ok() && direct == formula, || format!("{name}: double cosets"));
                }
            }
        }
    }
}

fn augmentation_sequence(name: &str) -> segal_core::Result<(StrictMorphism, StrictMorphism, IdealTower)> {
    let t = TableOfMarks::new(parse_group(name)?);
    let k = t.structure_constants()?;
    let aug = t.augmentation_ideal();
    let tower = IdealTower::new(k.clone(), aug.clone())?;
    let (i, a, q) = (RingModule::ideal(&k, &aug)?, RingModule::ring(t.len()), RingModule::quotient(&k, &aug)?);
    let id = IntMatrix::identity(t.len());
    let f = ModuleMap::new(&k, i, a.clone(), id.clone())?.adic_morphism(&tower, &tower)?;
    let g = ModuleMap::new(&k, a, q, id)?.adic_morphism(&tower, &tower)?;
    Ok((f, g, tower))
}

fn promod(c: &mut Checker) {
    for name in ["C2", "C3", "S3"] {
        let Some((f, g, _)) = c.ok(augmentation_sequence(name), name) else { return };
        let v = pro_exactness_check(&f, &g, 8);
        c.check(v.as_ref().is_ok_and(|v| v.is_verified()), || format!("{name}: 0 → I → A → A/I → 0 not pro-exact"));
        let v = pro_iso_check(&StrictMorphism::identity(f.target()), 8);
        let id_ok = v.as_ref().is_ok_and(|v| v.is_verified() && v.witnesses.iter().all(|(m, n)| m == n));
        c.check(id_ok, || format!("{name}: identity is not a pro-isomorphism"));
    }
}

fn completion(c: &mut Checker) {
    for (name, p) in [("C2", 2u64), ("C3", 3)] {
        let t = TableOfMarks::new(parse_group(name).unwrap());
        let Some(tower) = c.ok(IdealTower::augmentation(&t), name) else { return };
        let Some(levels) = c.ok(tower.quotient_tower(&RingModule::ring(t.len())).and_then(|q| q.materialize(8)), name)
        else {
            return;
        };
        for n in 1..=8usize {
            let expect = if n == 1 {
                FgAbelianGroup::free(1)
            } else {
                FgAbelianGroup::new(1, vec![BigInt::from(p).pow(n as u32 - 1)]).unwrap()
            };
            c.check(*levels.level(n) == expect, || format!("{name}: level {n}"));
            if n >= 2 {
                c.check(levels.alpha(n).is_surjective(), || format!("{name}: α_{n} not surjective"));
            }
        }
    }
}

fn segal(c: &mut Checker, seed: u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for name in FamilyDiagram::preset_names() {
        let Some(d) = c.ok(FamilyDiagram::preset(name).unwrap().prepare(), name) else { return };
        for k in 0..d.len() {
            let r = check_condition3(&d, k, &ConditionOptions::default());
            c.check(r.as_ref().is_ok_and(|r| r.pass()), || format!("{name}: condition (3) at object {k}"));
        }
    }
    let dinf = FamilyDiagram::preset("Dinf").unwrap().prepare().unwrap();
    for m in [2, 4] {
        for p in [2, 3] {
            let ok = restriction_compatibility_check(&dinf, m, p, &BuildOptions::default());
            c.check(ok == Ok(true), || format!("Dinf: restriction compatibility m={m} p={p}"));
        }
    }
    let base = build_sm(&dinf, 4, &BuildOptions::default());
    for _ in 0..3 {
        let mut u: Vec<u32> = (0..4).collect();
        u.shuffle(&mut rng);
        let opts = BuildOptions { bijection: Some(u.clone()), ..BuildOptions::default() };
        c.check(build_sm(&dinf, 4, &opts) == base, || format!("Dinf: [S_4] depends on u = {u:?}"));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integrality_suite_catches_a_corrupted_mark() {
        let clean = run_suites(&["integrality".into()], 0, None).unwrap();
        assert!(clean[0].passed());
        let broken = run_suites(&["integrality".into()], 0, Some(Fault::CorruptMarks)).unwrap();
        assert!(!broken[0].passed());
    }

    #[test]
    fn unknown_suites_are_rejected() {
        assert!(run_suites(&["nope".into()], 0, None).is_err());
    }
}
