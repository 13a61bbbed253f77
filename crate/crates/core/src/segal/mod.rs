//! Infinite groups through their families of finite subgroups: diagrams of
//! Burnside rings, their inverse limits, the families `[[S_m]]` and
//! `[[S_m/Syl_p(S_m)]]`, and the prime-ideal condition on `im φ_H`.

mod condition;
mod diagram;
mod limit;
mod sm;
pub mod symmetric;

pub use condition::{
    check_condition3, restriction_compatibility_check, Condition3Report, ConditionOptions, LabelVerdict,
    SylowTrace, TraceRow, CONDITION_DEGREE_BOUND,
};
pub use diagram::{Defect, DiagramMorphism, FamilyDiagram, PreparedDiagram};
pub use limit::{image_of_phi, inverse_limit, limit_basis, phi, CompatibleFamily};
pub use sm::{
    build_sm, build_sm_mod_sylow, coset_marks, regular_embedding, BuildOptions, BuildPath, SmElement, SmVariant,
    AUTO_ENUMERATION_LIMIT, DEFAULT_COSET_BOUND, DEFAULT_DEGREE_BOUND,
};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::burnside::{BurnsideElement, TableOfMarks};
    use crate::groups::{parse_group, Perm};
    use num_bigint::BigInt;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn single(spec: &str) -> PreparedDiagram {
        let g = parse_group(spec).unwrap();
        let n = g.order() as u64;
        FamilyDiagram::new(spec, alloc::vec![g], alloc::vec![], n).prepare().unwrap()
    }

    fn preset(name: &str) -> PreparedDiagram {
        FamilyDiagram::preset(name).unwrap().prepare().unwrap()
    }

    fn elt(v: &[i64]) -> BurnsideElement {
        BurnsideElement::from_i64(v)
    }

    /// Rank over Q of the limit: in mark coordinates restriction is
    /// `char_L(α^*x) = char_{α(L)}(x)`, so the rational limit is the free
    /// vector space on subgroup classes glued along all morphisms.
    fn rational_rank_oracle(d: &PreparedDiagram, ideals: bool) -> usize {
        let offsets = d.offsets();
        let mut parent: Vec<usize> = (0..offsets[d.len()]).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            if p[x] != x {
                let r = find(p, p[x]);
                p[x] = r;
            }
            p[x]
        }
        for (m, table) in d.morphisms().iter().zip(&d.homs) {
            let (t0, t1) = (&d.toms[m.src], &d.toms[m.dst]);
            let (g0, g1) = (t0.group(), t1.group());
            for (l, class) in t0.classes().iter().enumerate() {
                let image: Vec<Perm> = class
                    .representative
                    .elements()
                    .iter()
                    .map(|x| g1.element(table[g0.index_of(x).unwrap()]).clone())
                    .collect();
                let sub = g1.subgroup_generated(&image).unwrap();
                let j = t1.class_of(&sub).unwrap();
                let (a, b) = (find(&mut parent, offsets[m.src] + l), find(&mut parent, offsets[m.dst] + j));
                parent[a] = b;
            }
        }
        let mut roots: Vec<usize> = (0..parent.len()).map(|x| find(&mut parent, x)).collect();
        if ideals {
            // char at the trivial subgroup vanishes on augmentation ideals
            let dead: Vec<usize> = offsets[..d.len()].iter().map(|&o| roots[o]).collect();
            roots.retain(|r| !dead.contains(r));
        }
        roots.sort();
        roots.dedup();
        roots.len()
    }

    #[test]
    fn presets_validate() {
        for name in FamilyDiagram::preset_names() {
            let d = FamilyDiagram::preset(name).unwrap();
            assert!(d.validate().is_empty(), "{name}: {:?}", d.validate());
            assert_eq!(d.lcm_of_orders(), d.order_bound);
        }
        let sl = FamilyDiagram::preset("SL2Z").unwrap();
        let orders: Vec<usize> = sl.objects.iter().map(|g| g.order()).collect();
        assert_eq!(orders, [1, 2, 3, 4, 6]);
        assert_eq!(sl.morphisms.len(), 7);
    }

    #[test]
    fn defects_are_reported() {
        let c3 = parse_group("C3").unwrap();
        let d = FamilyDiagram::new("bad", alloc::vec![c3.clone()], alloc::vec![], 2);
        assert_eq!(d.validate().len(), 1);
        assert!(d.prepare().is_err());
        // C3 → C3 sending the generator to the identity
        let trivial = DiagramMorphism { src: 0, dst: 0, gen_images: alloc::vec![Perm::identity(3)] };
        let d = FamilyDiagram::new("bad", alloc::vec![c3.clone()], alloc::vec![trivial], 3);
        assert_eq!(d.validate()[0].morphism, Some(0));
        // C2 → C3 is no homomorphism at all
        let c2 = parse_group("C2").unwrap();
        let bogus = DiagramMorphism { src: 0, dst: 1, gen_images: alloc::vec![c3.generators()[0].clone()] };
        let d = FamilyDiagram::new("bad", alloc::vec![c2, c3], alloc::vec![bogus], 6);
        assert_eq!(d.validate().len(), 1);
        assert!(FamilyDiagram::preset("Z").is_err());
    }

    #[test]
    fn single_object_limit_is_everything() {
        for spec in ["C1", "C2", "S3", "C6"] {
            let d = single(spec);
            let full = inverse_limit(&d, false).unwrap();
            assert_eq!(full, crate::zlattice::IntegerLattice::full(d.toms[0].len()), "{spec}");
            assert_eq!(inverse_limit(&d, true).unwrap(), d.toms[0].augmentation_ideal());
        }
    }

    #[test]
    fn dinf_limits() {
        let d = preset("Dinf");
        let ideals = inverse_limit(&d, true).unwrap();
        assert_eq!(ideals.rank(), 2);
        // (0 ; t ; 0) and (0 ; 0 ; t) with t = [C2/1] − 2
        for v in [[0, 1, -2, 0, 0], [0, 0, 0, 1, -2]] {
            assert!(ideals.contains(&v.map(BigInt::from)));
        }
        assert_eq!(ideals.index(), None);
        assert_eq!(inverse_limit(&d, false).unwrap().rank(), 3);
        for ideal in [false, true] {
            assert_eq!(inverse_limit(&d, ideal).unwrap().rank(), rational_rank_oracle(&d, ideal));
        }
        // φ at the first C2 of (a·t, b·t)
        let x = CompatibleFamily { components: alloc::vec![elt(&[0]), elt(&[3, -6]), elt(&[-1, 2])] };
        assert!(x.is_compatible(&d).unwrap());
        assert_eq!(phi(&x, 1).unwrap(), elt(&[3, -6]));
        assert!(phi(&x, 3).is_err());
        let one = CompatibleFamily::unit(&d);
        assert!(one.is_compatible(&d).unwrap());
        assert_eq!(phi(&one, 2).unwrap(), d.toms[2].one());
    }

    #[test]
    fn sl2z_full_limit_has_rank_five() {
        let d = preset("SL2Z");
        assert_eq!(d.offsets()[d.len()], 12);
        let full = inverse_limit(&d, false).unwrap();
        assert_eq!(rational_rank_oracle(&d, false), 5);
        assert_eq!(full.rank(), 5);
        assert_eq!(inverse_limit(&d, true).unwrap().rank(), rational_rank_oracle(&d, true));
        for b in limit_basis(&d, &full).unwrap() {
            assert!(b.is_compatible(&d).unwrap());
        }
        for name in ["Dinf", "PSL2Z"] {
            let d = preset(name);
            for ideal in [false, true] {
                assert_eq!(inverse_limit(&d, ideal).unwrap().rank(), rational_rank_oracle(&d, ideal), "{name}");
            }
        }
    }

    #[test]
    fn automorphisms_do_not_change_the_limit() {
        let base = FamilyDiagram::preset("SL2Z").unwrap();
        let mut extended = base.clone();
        for k in [2usize, 3, 4] {
            let g = &extended.objects[k];
            let gen = g.generators()[0].clone();
            let inverse = gen.pow(g.order() as u64 - 1);
            extended.morphisms.push(DiagramMorphism { src: k, dst: k, gen_images: alloc::vec![inverse] });
        }
        let (a, b) = (base.prepare().unwrap(), extended.prepare().unwrap());
        for ideal in [false, true] {
            let (la, lb) = (inverse_limit(&a, ideal).unwrap(), inverse_limit(&b, ideal).unwrap());
            assert_eq!(la, lb);
            for k in 0..a.len() {
                assert_eq!(image_of_phi(&a, &la, k).unwrap(), image_of_phi(&b, &lb, k).unwrap());
            }
        }
    }

    #[test]
    fn sm_examples() {
        let opts = BuildOptions::default();
        let c2 = single("C2");
        let x = build_sm(&c2, 2, &opts).unwrap();
        assert_eq!(x.family.components[0], elt(&[1, 0]));
        assert_eq!(x.cardinality, BigInt::from(2));
        let c3 = single("C3");
        assert_eq!(build_sm(&c3, 3, &opts).unwrap().family.components[0], elt(&[2, 0]));
        let c1 = single("C1");
        for m in 1..=6u64 {
            let x = build_sm(&c1, m, &opts).unwrap();
            assert_eq!(x.family.components[0].coeffs[0], symmetric::factorial(m));
        }
        assert!(matches!(build_sm(&c3, 4, &opts), Err(crate::Error::NotCommonMultiple { m: 4 })));
        assert!(matches!(build_sm(&c3, 9, &opts), Err(crate::Error::DegreeBound { m: 9, bound: 8 })));
    }

    #[test]
    fn mod_sylow_examples() {
        let opts = BuildOptions::default();
        let c2 = single("C2");
        let at = |m, p| build_sm_mod_sylow(&c2, m, p, &opts).unwrap().family.components[0].clone();
        assert_eq!(at(2, 2), elt(&[0, 1]));
        assert_eq!(at(2, 3), elt(&[1, 0]));
        // ρ(C2) is a double transposition, inside every Sylow 2-subgroup of S_4
        assert_eq!(at(4, 2), elt(&[0, 3]));
        let x = build_sm_mod_sylow(&c2, 4, 2, &opts).unwrap();
        assert_eq!(x.cardinality, BigInt::from(3));
        assert!(matches!(build_sm_mod_sylow(&c2, 2, 4, &opts), Err(crate::Error::NotPrime(4))));
    }

    #[test]
    fn build_paths_agree() {
        let enumerate = BuildOptions::with_path(BuildPath::Enumerate);
        let shortcut = BuildOptions::with_path(BuildPath::Shortcut);
        let cases: [(&str, &[u64]); 7] = [
            ("C1", &[1, 2, 3, 4, 5, 6]),
            ("C2", &[2, 4, 6]),
            ("C3", &[3, 6]),
            ("C4", &[4]),
            ("C6", &[6]),
            ("S3", &[6]),
            ("D4", &[4]),
        ];
        for (spec, ms) in cases {
            let d = single(spec);
            for &m in ms {
                let a = build_sm(&d, m, &enumerate).unwrap();
                let b = build_sm(&d, m, &shortcut).unwrap();
                assert_eq!(a, b, "{spec} m={m}");
                for p in [2u64, 3, 5, 7] {
                    let a = build_sm_mod_sylow(&d, m, p, &enumerate).unwrap();
                    let b = build_sm_mod_sylow(&d, m, p, &shortcut).unwrap();
                    assert_eq!(a, b, "{spec} m={m} p={p}");
                }
            }
        }
    }

    #[test]
    fn independent_of_the_bijection() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for spec in ["C2", "C3", "C4", "D4"] {
            let d = single(spec);
            let n = d.objects()[0].order() as u64;
            for m in (1..=5u64).filter(|m| m % n == 0) {
                let base = build_sm(&d, m, &BuildOptions::default()).unwrap();
                let base_syl = build_sm_mod_sylow(&d, m, 2, &BuildOptions::default()).unwrap();
                for _ in 0..3 {
                    let mut u: Vec<u32> = (0..m as u32).collect();
                    u.shuffle(&mut rng);
                    let opts = BuildOptions { bijection: Some(u), ..BuildOptions::default() };
                    assert_eq!(build_sm(&d, m, &opts).unwrap(), base);
                    assert_eq!(build_sm_mod_sylow(&d, m, 2, &opts).unwrap(), base_syl);
                }
            }
        }
    }

    #[test]
    fn marks_of_sm_elements() {
        for spec in ["C1", "C2", "C3", "C4", "C6", "S3", "D4"] {
            let d = single(spec);
            let tom: &TableOfMarks = &d.toms[0];
            let n = tom.group().order() as u64;
            for m in (1..=6u64).filter(|m| m % n == 0) {
                let full = build_sm(&d, m, &BuildOptions::default()).unwrap();
                let marks = tom.marks_of(&full.family.components[0]).unwrap().values;
                assert_eq!(marks[0], symmetric::factorial(m));
                assert!(marks[1..].iter().all(|v| *v == BigInt::from(0)), "{spec} m={m}: free");
                for p in [2u64, 3, 5] {
                    let x = build_sm_mod_sylow(&d, m, p, &BuildOptions::default()).unwrap();
                    let marks = tom.marks_of(&x.family.components[0]).unwrap().values;
                    for (j, v) in marks.iter().enumerate() {
                        if *v != BigInt::from(0) {
                            let h = tom.classes()[j].representative.to_group();
                            assert!(h.is_p_group(p), "{spec} m={m} p={p} class {j}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn condition3_on_dinf() {
        let d = preset("Dinf");
        let opts = ConditionOptions { m: Some(2), ..ConditionOptions::default() };
        let r = check_condition3(&d, 1, &opts).unwrap();
        assert!(r.pass());
        assert!(r.image_is_whole_ideal);
        assert_eq!(r.trace.rows[1].full, BigInt::from(-2));
        assert!(r.trace.conclusion_holds && r.trace.in_limit);
        assert_eq!(r.primes, [0, 2, 3]);
        assert!(check_condition3(&d, 0, &opts).unwrap().pass());
    }

    #[test]
    fn condition3_on_single_objects() {
        for spec in ["C2", "C6", "S3", "D4"] {
            let d = single(spec);
            let r = check_condition3(&d, 0, &ConditionOptions::default()).unwrap();
            assert!(r.pass() && r.image_is_whole_ideal, "{spec}");
        }
    }

    #[test]
    fn condition3_on_sl2z() {
        let d = preset("SL2Z");
        let r = check_condition3(&d, 3, &ConditionOptions::default()).unwrap();
        assert!(r.pass());
        assert_eq!(r.trace.m, 12);
        assert!(r.trace.in_limit && r.trace.conclusion_holds);
        let classes: Vec<usize> = r.labels.iter().filter(|l| l.label.p == 0).map(|l| l.subgroup_order).collect();
        assert_eq!(classes, [1, 2, 4]);
        assert!(r.primes.starts_with(&[0, 2]));
        assert_eq!(r.labels.len(), 3 * r.primes.len());
        for k in 0..d.len() {
            assert!(check_condition3(&d, k, &ConditionOptions::default()).unwrap().pass(), "object {k}");
        }
    }

    #[test]
    fn restriction_compatibility() {
        let opts = BuildOptions::default();
        let d = preset("Dinf");
        for m in [2, 4] {
            for p in [2, 3] {
                assert!(restriction_compatibility_check(&d, m, p, &opts).unwrap(), "m={m} p={p}");
            }
        }
        let sl = FamilyDiagram::preset("SL2Z").unwrap();
        let sub = sl.sub_diagram(&[0, 1, 2, 4]).unwrap().prepare().unwrap();
        assert_eq!(sub.diagram.order_bound, 6);
        assert_eq!(sub.morphisms().len(), 5);
        let enumerate = BuildOptions::with_path(BuildPath::Enumerate);
        for p in [2, 3, 5] {
            assert!(restriction_compatibility_check(&sub, 6, p, &enumerate).unwrap());
        }
        let wide = BuildOptions::with_degree_bound(12);
        assert!(restriction_compatibility_check(&preset("SL2Z"), 12, 2, &wide).unwrap());
        assert!(restriction_compatibility_check(&single("S3"), 6, 2, &opts).unwrap());
    }
}
