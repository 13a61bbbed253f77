//! JSON input formats: family diagrams, towers and strict morphisms.
//!
//! Integers may be given as JSON numbers or as decimal strings.

use std::path::Path;

use num_bigint::BigInt;
use serde_json::Value;

use segal_core::burnside::TableOfMarks;
use segal_core::completion::{IdealTower, ModuleMap, RingModule};
use segal_core::groups::{parse_group, Perm};
use segal_core::promod::{Components, StrictMorphism, Tower};
use segal_core::segal::{DiagramMorphism, FamilyDiagram};
use segal_core::zlattice::{AbelianMap, FgAbelianGroup, IntMatrix, IntegerLattice, StructureConstants};

use crate::ToolError;

type Result<T> = std::result::Result<T, ToolError>;

fn bad(what: impl Into<String>) -> ToolError {
    ToolError::Input(what.into())
}

/// Reads a JSON document from inline text (starting with `{`), `-` (stdin)
/// or a file path.
pub fn load_json(arg: &str) -> Result<Value> {
    let text = if arg.trim_start().starts_with('{') {
        arg.to_string()
    } else if arg == "-" {
        std::io::read_to_string(std::io::stdin()).map_err(|e| bad(format!("stdin: {e}")))?
    } else {
        std::fs::read_to_string(Path::new(arg)).map_err(|e| bad(format!("{arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| bad(format!("malformed JSON: {e}")))
}

pub fn int(v: &Value) -> Result<BigInt> {
    match v {
        Value::Number(n) => n.to_string().parse().map_err(|_| bad(format!("not an integer: {n}"))),
        Value::String(s) => s.trim().parse().map_err(|_| bad(format!("not an integer: {s:?}"))),
        _ => Err(bad(format!("expected an integer, found {v}"))),
    }
}

pub fn small(v: &Value) -> Result<usize> {
    let n = int(v)?;
    usize::try_from(n).map_err(|_| bad(format!("expected a nonnegative index, found {v}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| bad(format!("`{what}` must be an array")))
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value> {
    v.get(key).ok_or_else(|| bad(format!("missing field `{key}`")))
}

pub fn vector(v: &Value) -> Result<Vec<BigInt>> {
    array(v, "vector")?.iter().map(int).collect()
}

pub fn rows(v: &Value) -> Result<Vec<Vec<BigInt>>> {
    array(v, "matrix")?.iter().map(vector).collect()
}

fn matrix(v: &Value, cols: usize) -> Result<IntMatrix> {
    let rows = rows(v)?;
    if rows.iter().any(|r| r.len() != cols) {
        return Err(bad(format!("matrix rows must have {cols} entries")));
    }
    Ok(IntMatrix::from_rows(cols, rows))
}

/// A preset name, inline JSON, or a path to a diagram file.
pub fn diagram(arg: &str) -> Result<FamilyDiagram> {
    if FamilyDiagram::preset_names().contains(&arg) {
        return Ok(FamilyDiagram::preset(arg)?);
    }
    let v = load_json(arg)?;
    diagram_from_json(&v)
}

pub fn diagram_from_json(v: &Value) -> Result<FamilyDiagram> {
    let objects = array(field(v, "objects")?, "objects")?
        .iter()
        .map(|o| {
            let spec = o.as_str().ok_or_else(|| bad("objects are group descriptions"))?;
            Ok(parse_group(spec)?)
        })
        .collect::<Result<Vec<_>>>()?;
    let morphisms = match v.get("morphisms") {
        None => Vec::new(),
        Some(ms) => array(ms, "morphisms")?
            .iter()
            .map(|m| {
                let gen_images = array(field(m, "gen_images")?, "gen_images")?
                    .iter()
                    .map(|img| {
                        let images = array(img, "image")?
                            .iter()
                            .map(|x| small(x).and_then(|x| u32::try_from(x).map_err(|_| bad("point too large"))))
                            .collect::<Result<Vec<u32>>>()?;
                        Ok(Perm::new(images)?)
                    })
                    .collect::<Result<Vec<_>>>()?;
                Ok(DiagramMorphism { src: small(field(m, "src")?)?, dst: small(field(m, "dst")?)?, gen_images })
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let order_bound = match v.get("order_bound") {
        Some(b) => u64::try_from(int(b)?).map_err(|_| bad("order_bound must be a positive integer"))?,
        None => 0,
    };
    let name = v.get("name").and_then(Value::as_str).unwrap_or("custom");
    let mut d = FamilyDiagram::new(name, objects, morphisms, order_bound);
    if order_bound == 0 {
        d.order_bound = d.lcm_of_orders();
    }
    Ok(d)
}

pub fn abelian_group(v: &Value) -> Result<FgAbelianGroup> {
    let free = match v.get("free_rank") {
        Some(f) => small(f)?,
        None => 0,
    };
    let torsion = match v.get("torsion") {
        Some(t) => vector(t)?,
        None => Vec::new(),
    };
    Ok(FgAbelianGroup::new(free, torsion)?)
}

/// Ring data for the I-adic rule.
struct AdicRing {
    tom: TableOfMarks,
    constants: StructureConstants,
}

impl AdicRing {
    fn new(v: &Value) -> Result<Self> {
        let spec = field(v, "group")?.as_str().ok_or_else(|| bad("`group` is a group description"))?;
        let tom = TableOfMarks::new(parse_group(spec)?);
        let constants = tom.structure_constants()?;
        Ok(AdicRing { tom, constants })
    }

    fn ideal(&self, v: Option<&Value>) -> Result<IdealTower> {
        let lattice = match v {
            None => self.tom.augmentation_ideal(),
            Some(Value::String(s)) if s == "augmentation" => self.tom.augmentation_ideal(),
            Some(obj) => {
                let base = match obj.get("generators") {
                    Some(g) => IntegerLattice::from_generators(self.tom.len(), check_len(rows(g)?, self.tom.len())?),
                    None => self.tom.augmentation_ideal(),
                };
                match obj.get("scale") {
                    Some(k) => base.scaled(&int(k)?),
                    None => base,
                }
            }
        };
        Ok(IdealTower::new(self.constants.clone(), lattice)?)
    }

    fn module(&self, v: Option<&Value>) -> Result<RingModule> {
        let r = self.tom.len();
        let aug = self.tom.augmentation_ideal();
        Ok(match v {
            None => RingModule::ring(r),
            Some(Value::String(s)) => match s.as_str() {
                "ring" => RingModule::ring(r),
                "ideal" | "augmentation" => RingModule::ideal(&self.constants, &aug)?,
                "quotient" => RingModule::quotient(&self.constants, &aug)?,
                other => return Err(bad(format!("unknown module `{other}`"))),
            },
            Some(obj) => {
                let copies = match obj.get("copies") {
                    Some(c) => small(c)?,
                    None => 1,
                };
                let n = r * copies;
                let gens = match obj.get("generators") {
                    Some(g) => IntegerLattice::from_generators(n, check_len(rows(g)?, n)?),
                    None => IntegerLattice::full(n),
                };
                let rels = match obj.get("relations") {
                    Some(g) => IntegerLattice::from_generators(n, check_len(rows(g)?, n)?),
                    None => IntegerLattice::zero(n),
                };
                RingModule::new(&self.constants, copies, gens, rels)?
            }
        })
    }
}

fn check_len(rows: Vec<Vec<BigInt>>, n: usize) -> Result<Vec<Vec<BigInt>>> {
    if rows.iter().any(|r| r.len() != n) {
        return Err(bad(format!("vectors must have {n} entries")));
    }
    Ok(rows)
}

pub fn tower(v: &Value) -> Result<Tower> {
    match v.get("rule").map(|r| r.as_str().ok_or_else(|| bad("`rule` is a string"))) {
        Some(rule) => match rule? {
            "constant" => Ok(Tower::constant(abelian_group(field(v, "group")?)?)),
            "multiplication" => Ok(Tower::multiplication(int(field(v, "factor")?)?)),
            "iadic" => {
                let ring = AdicRing::new(v)?;
                let module = ring.module(v.get("module"))?;
                Ok(ring.ideal(v.get("ideal"))?.quotient_tower(&module)?)
            }
            other => Err(bad(format!("unknown tower rule `{other}`"))),
        },
        None => {
            let levels = array(field(v, "levels")?, "levels")?.iter().map(abelian_group).collect::<Result<Vec<_>>>()?;
            let maps = match v.get("maps") {
                Some(ms) => array(ms, "maps")?
                    .iter()
                    .enumerate()
                    .map(|(i, m)| {
                        let (src, dst) = (levels.get(i + 1), levels.get(i));
                        let (src, dst) = src.zip(dst).ok_or_else(|| bad("more maps than levels"))?;
                        Ok(AbelianMap::new(src.clone(), dst.clone(), matrix(m, dst.ngens())?)?)
                    })
                    .collect::<Result<Vec<_>>>()?,
                None => Vec::new(),
            };
            Ok(Tower::explicit(levels, maps)?)
        }
    }
}

pub fn morphism(v: &Value) -> Result<StrictMorphism> {
    if let Some(rule) = v.get("rule") {
        if rule.as_str() != Some("iadic") {
            return Err(bad(format!("unknown morphism rule {rule}")));
        }
        let ring = AdicRing::new(v)?;
        let source = ring.module(v.get("source_module").or_else(|| v.get("module")))?;
        let target = ring.module(v.get("target_module").or_else(|| v.get("module")))?;
        let si = ring.ideal(v.get("source_ideal").or_else(|| v.get("ideal")))?;
        let ti = ring.ideal(v.get("target_ideal").or_else(|| v.get("ideal")))?;
        let m = match v.get("matrix") {
            Some(m) => matrix(m, target.ambient())?,
            None if source.ambient() == target.ambient() => IntMatrix::identity(source.ambient()),
            None => return Err(bad("`matrix` is required between modules of different ranks")),
        };
        let map = ModuleMap::new(&ring.constants, source, target, m)?;
        return Ok(map.adic_morphism(&si, &ti)?);
    }
    let source = tower(field(v, "source")?)?;
    let target = tower(field(v, "target")?)?;
    let components = match field(v, "components")? {
        Value::String(s) if s == "identity" => Components::Identity,
        Value::String(s) if s == "zero" => Components::Zero,
        list => {
            let horizon = source.horizon().zip(target.horizon()).map(|(a, b)| a.min(b));
            let n = array(list, "components")?.len();
            let upto = horizon.unwrap_or(n).min(n);
            let (s, t) = (source.materialize(upto)?, target.materialize(upto)?);
            let maps = array(list, "components")?
                .iter()
                .take(upto)
                .enumerate()
                .map(|(i, m)| {
                    let (a, b) = (s.level(i + 1), t.level(i + 1));
                    Ok(AbelianMap::new(a.clone(), b.clone(), matrix(m, b.ngens())?)?)
                })
                .collect::<Result<Vec<_>>>()?;
            Components::Explicit(maps)
        }
    };
    Ok(StrictMorphism::new(source, target, components))
}

/// `{"f": morphism, "g": morphism}`
pub fn morphism_pair(v: &Value) -> Result<(StrictMorphism, StrictMorphism)> {
    Ok((morphism(field(v, "f")?)?, morphism(field(v, "g")?)?))
}
