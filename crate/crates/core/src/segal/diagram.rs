use alloc::string::String;
use alloc::vec::Vec;

use num_integer::Integer;

use crate::burnside::{restrict_along, TableOfMarks};
use crate::groups::{is_injective, parse_group, GroupHom, Perm, PermGroup};
use crate::{Error, Result};

/// A generating morphism `src → dst` of the diagram: an injective
/// homomorphism given by the images of the generators of `src`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiagramMorphism {
    pub src: usize,
    pub dst: usize,
    pub gen_images: Vec<Perm>,
}

/// A finite skeleton of the orbit category of a family of finite
/// subgroups: one group per conjugacy class, plus generating morphisms.
///
/// Identities are implicit. Composites of generators impose no further
/// constraints on inverse limits, because restriction is functorial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyDiagram {
    pub name: String,
    pub objects: Vec<PermGroup>,
    pub morphisms: Vec<DiagramMorphism>,
    /// A common multiple of all object orders.
    pub order_bound: u64,
}

/// One problem found by [`FamilyDiagram::validate`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Defect {
    /// Offending morphism, if the defect concerns one.
    pub morphism: Option<usize>,
    pub message: String,
}

impl FamilyDiagram {
    pub fn new(name: &str, objects: Vec<PermGroup>, morphisms: Vec<DiagramMorphism>, order_bound: u64) -> Self {
        FamilyDiagram { name: name.into(), objects, morphisms, order_bound }
    }

    /// `Dinf`, `PSL2Z` or `SL2Z`.
    pub fn preset(name: &str) -> Result<Self> {
        match name {
            "Dinf" => Ok(dinf()),
            "PSL2Z" => Ok(psl2z()),
            "SL2Z" => Ok(sl2z()),
            _ => Err(Error::Diagram(alloc::format!("unknown preset `{name}`"))),
        }
    }

    pub fn preset_names() -> &'static [&'static str] {
        &["Dinf", "PSL2Z", "SL2Z"]
    }

    /// Least common multiple of the object orders.
    pub fn lcm_of_orders(&self) -> u64 {
        self.objects.iter().fold(1u64, |acc, g| acc.lcm(&(g.order() as u64)))
    }

    /// Everything wrong with the diagram; empty when it is valid.
    pub fn validate(&self) -> Vec<Defect> {
        let mut defects = Vec::new();
        if self.objects.is_empty() {
            defects.push(Defect { morphism: None, message: "diagram has no objects".into() });
        }
        if self.order_bound == 0 {
            defects.push(Defect { morphism: None, message: "order bound must be positive".into() });
        }
        for (i, g) in self.objects.iter().enumerate() {
            if self.order_bound != 0 && self.order_bound % g.order() as u64 != 0 {
                defects.push(Defect {
                    morphism: None,
                    message: alloc::format!("object {i} has order {} not dividing {}", g.order(), self.order_bound),
                });
            }
        }
        let mut tables: Vec<Option<Vec<usize>>> = Vec::new();
        for (k, mor) in self.morphisms.iter().enumerate() {
            let defect = |message: String| Defect { morphism: Some(k), message };
            if mor.src >= self.objects.len() || mor.dst >= self.objects.len() {
                defects.push(defect(alloc::format!("endpoints {} → {} out of range", mor.src, mor.dst)));
                tables.push(None);
                continue;
            }
            let hom = GroupHom { gen_images: mor.gen_images.clone() };
            match hom.tabulate(&self.objects[mor.src], &self.objects[mor.dst]) {
                Ok(t) if is_injective(&t) => tables.push(Some(t)),
                Ok(_) => {
                    defects.push(defect("homomorphism is not injective".into()));
                    tables.push(None);
                }
                Err(e) => {
                    defects.push(defect(alloc::format!("{e}")));
                    tables.push(None);
                }
            }
        }
        if !defects.is_empty() {
            return defects;
        }
        // functoriality on composable pairs: res_{β∘α} = res_α ∘ res_β
        let toms: Vec<TableOfMarks> = self.objects.iter().map(|g| TableOfMarks::new(g.clone())).collect();
        for (a, ma) in self.morphisms.iter().enumerate() {
            for (b, mb) in self.morphisms.iter().enumerate() {
                if ma.dst != mb.src {
                    continue;
                }
                let (ta, tb) = (tables[a].as_ref().expect("valid"), tables[b].as_ref().expect("valid"));
                let composite: Vec<usize> = ta.iter().map(|&x| tb[x]).collect();
                let (t0, t1, t2) = (&toms[ma.src], &toms[ma.dst], &toms[mb.dst]);
                for i in 0..t2.len() {
                    let x = t2.basis(i);
                    let direct = restrict_along(t2, &x, t0, &composite);
                    let stepwise = restrict_along(t2, &x, t1, tb).and_then(|y| restrict_along(t1, &y, t0, ta));
                    if direct.is_err() || stepwise.is_err() || direct != stepwise {
                        defects.push(Defect {
                            morphism: Some(b),
                            message: alloc::format!("restriction is not functorial on morphisms {a} then {b}"),
                        });
                        break;
                    }
                }
            }
        }
        defects
    }

    /// Validates and tabulates everything later operations need.
    pub fn prepare(&self) -> Result<PreparedDiagram> {
        if let Some(d) = self.validate().into_iter().next() {
            return Err(Error::Diagram(d.message));
        }
        let toms = self.objects.iter().map(|g| TableOfMarks::new(g.clone())).collect();
        let homs = self
            .morphisms
            .iter()
            .map(|m| GroupHom { gen_images: m.gen_images.clone() }.tabulate(&self.objects[m.src], &self.objects[m.dst]))
            .collect::<Result<Vec<_>>>()?;
        Ok(PreparedDiagram { diagram: self.clone(), toms, homs })
    }

    /// The full subdiagram on `keep` (in the given order), with the order
    /// bound reset to the least common multiple of the kept orders.
    pub fn sub_diagram(&self, keep: &[usize]) -> Result<FamilyDiagram> {
        if keep.iter().any(|&i| i >= self.objects.len()) {
            return Err(Error::Index("object index out of range".into()));
        }
        let pos = |i: usize| keep.iter().position(|&k| k == i);
        let objects: Vec<PermGroup> = keep.iter().map(|&i| self.objects[i].clone()).collect();
        let morphisms = self
            .morphisms
            .iter()
            .filter_map(|m| {
                Some(DiagramMorphism { src: pos(m.src)?, dst: pos(m.dst)?, gen_images: m.gen_images.clone() })
            })
            .collect();
        let mut d = FamilyDiagram::new(&alloc::format!("{} (sub)", self.name), objects, morphisms, 1);
        d.order_bound = d.lcm_of_orders();
        Ok(d)
    }
}

/// A validated diagram with tables of marks and element-index tables of
/// its morphisms.
#[derive(Clone, Debug)]
pub struct PreparedDiagram {
    pub diagram: FamilyDiagram,
    pub toms: Vec<TableOfMarks>,
    /// `homs[k][i]`: index in the target of the image of source element `i`.
    pub homs: Vec<Vec<usize>>,
}

impl PreparedDiagram {
    pub fn objects(&self) -> &[PermGroup] {
        &self.diagram.objects
    }

    pub fn morphisms(&self) -> &[DiagramMorphism] {
        &self.diagram.morphisms
    }

    pub fn len(&self) -> usize {
        self.toms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.toms.is_empty()
    }

    /// Start of each object's block in `⊕_K A(K)`, plus the total rank.
    pub fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len() + 1);
        let mut acc = 0;
        for t in &self.toms {
            out.push(acc);
            acc += t.len();
        }
        out.push(acc);
        out
    }
}

fn cyclic(n: usize) -> PermGroup {
    parse_group(&alloc::format!("C{n}")).expect("cyclic preset")
}

fn power_of_generator(g: &PermGroup, e: u64) -> Perm {
    g.generators().first().map_or_else(|| Perm::identity(g.degree()), |c| c.pow(e))
}

/// `src` is cyclic of order `n` and `dst` cyclic of order `k·n`: generator
/// to `k`-th power of the target generator.
fn cyclic_inclusion(objects: &[PermGroup], src: usize, dst: usize) -> DiagramMorphism {
    let (a, b) = (&objects[src], &objects[dst]);
    let gen_images = if a.order() == 1 {
        Vec::new()
    } else {
        alloc::vec![power_of_generator(b, (b.order() / a.order()) as u64)]
    };
    DiagramMorphism { src, dst, gen_images }
}

fn from_inclusions(name: &str, orders: &[usize], edges: &[(usize, usize)], bound: u64) -> FamilyDiagram {
    let objects: Vec<PermGroup> = orders.iter().map(|&n| cyclic(n)).collect();
    let morphisms = edges.iter().map(|&(s, d)| cyclic_inclusion(&objects, s, d)).collect();
    FamilyDiagram::new(name, objects, morphisms, bound)
}

/// `D∞ = C2 * C2`: the trivial group and two non-conjugate `C2`s.
fn dinf() -> FamilyDiagram {
    from_inclusions("Dinf", &[1, 2, 2], &[(0, 1), (0, 2)], 2)
}

/// `PSL(2,Z) = C2 * C3`.
fn psl2z() -> FamilyDiagram {
    from_inclusions("PSL2Z", &[1, 2, 3], &[(0, 1), (0, 2)], 6)
}

/// `SL(2,Z) = C4 *_{C2} C6`: classes `1, C2, C3, C4, C6`, with the
/// central `C2` inside both `C4` and `C6`.
fn sl2z() -> FamilyDiagram {
    from_inclusions(
        "SL2Z",
        &[1, 2, 3, 4, 6],
        &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 3), (1, 4), (2, 4)],
        12,
    )
}
