//! JSON renderings of core results. Every number is a decimal string.

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use segal_core::burnside::{BurnsideElement, PrimeIdealLabel, TableOfMarks};
use segal_core::completion::CompletionReport;
use segal_core::groups::{Perm, PermGroup};
use segal_core::promod::{LimitReport, ProVerdict, ProfinitePattern, Status};
use segal_core::segal::{Condition3Report, FamilyDiagram, SylowTrace};
use segal_core::zlattice::FgAbelianGroup;

pub fn num(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

pub fn nums<T: ToString>(xs: impl IntoIterator<Item = T>) -> Value {
    Value::Array(xs.into_iter().map(num).collect())
}

pub fn perm(p: &Perm) -> Value {
    nums(p.images().iter())
}

pub fn group(g: &PermGroup) -> Value {
    json!({
        "degree": num(g.degree()),
        "generators": g.generators().iter().map(perm).collect::<Vec<_>>(),
        "order": num(g.order()),
    })
}

/// `Z^2 ⊕ Z/2 ⊕ Z/4`, or `0`.
pub fn abelian_name(g: &FgAbelianGroup) -> String {
    let mut parts: Vec<String> = Vec::new();
    match g.free_rank() {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{r}")),
    }
    parts.extend(g.invariant_factors().iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

pub fn abelian(g: &FgAbelianGroup) -> Value {
    json!({
        "free_rank": num(g.free_rank()),
        "torsion": nums(g.invariant_factors().iter()),
        "name": abelian_name(g),
    })
}

pub fn element(x: &BurnsideElement) -> Value {
    nums(x.coeffs.iter())
}

pub fn tom(t: &TableOfMarks) -> Value {
    let classes: Vec<Value> = t
        .classes()
        .iter()
        .enumerate()
        .map(|(i, c)| {
            json!({
                "index": num(i),
                "order": num(c.order),
                "conjugates": num(c.size()),
                "generators": c.representative.small_generators().iter().map(perm).collect::<Vec<_>>(),
            })
        })
        .collect();
    let marks: Vec<Value> = t.marks_matrix().iter().map(|r| nums(r.iter())).collect();
    json!({ "group": group(t.group()), "classes": classes, "marks": marks })
}

pub fn label(l: &PrimeIdealLabel) -> Value {
    json!({ "class": num(l.class), "p": num(l.p) })
}

pub fn spectrum(t: &TableOfMarks, primes: &[u64], blocks: &[Vec<PrimeIdealLabel>]) -> Value {
    json!({
        "group": group(t.group()),
        "class_orders": nums(t.classes().iter().map(|c| c.order)),
        "primes": nums(primes.iter()),
        "blocks": blocks.iter().map(|b| Value::Array(b.iter().map(label).collect())).collect::<Vec<_>>(),
    })
}

pub fn status(s: Status) -> Value {
    Value::String(
        match s {
            Status::Verified => "verified",
            Status::Refuted => "refuted",
            Status::Inconclusive => "inconclusive",
        }
        .into(),
    )
}

pub fn verdict(v: &ProVerdict) -> Value {
    json!({
        "status": status(v.status),
        "witnesses": v.witnesses.iter().map(|(m, n)| json!({"m": num(m), "n": num(n)})).collect::<Vec<_>>(),
        "refutation": v.refutation.as_ref().map(|r| json!({"m": num(r.m), "reason": r.reason})),
        "bound": num(v.bound),
    })
}

pub fn pattern(p: &ProfinitePattern) -> Value {
    json!({
        "free_rank": num(p.free_rank),
        "padic_ranks": p.padic_ranks.iter().map(|(q, r)| json!({"p": num(q), "rank": num(r)})).collect::<Vec<_>>(),
        "finite_part": nums(p.finite_part.iter()),
        "certified": p.certified,
        "window": nums([p.window.0, p.window.1]),
        "description": pattern_name(p),
    })
}

pub fn pattern_name(p: &ProfinitePattern) -> String {
    let mut parts: Vec<String> = Vec::new();
    match p.free_rank {
        0 => {}
        1 => parts.push("Z".into()),
        r => parts.push(format!("Z^{r}")),
    }
    for (q, r) in &p.padic_ranks {
        parts.push(if *r == 1 { format!("Z_{q}") } else { format!("Z_{q}^{r}") });
    }
    parts.extend(p.finite_part.iter().map(|d| format!("Z/{d}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

pub fn limit(r: &LimitReport) -> Value {
    match r {
        LimitReport::Group(g) => json!({"kind": "group", "group": abelian(g)}),
        LimitReport::Profinite(p) => json!({"kind": "profinite", "pattern": pattern(p)}),
        LimitReport::Inconclusive(gs) => json!({"kind": "inconclusive", "partial": gs.iter().map(abelian).collect::<Vec<_>>()}),
    }
}

pub fn completion(r: &CompletionReport) -> Value {
    json!({
        "levels": r.levels.iter().map(abelian).collect::<Vec<_>>(),
        "pattern": r.pattern.as_ref().map(pattern),
        "pattern_certified": r.pattern_certified,
    })
}

pub fn diagram(d: &FamilyDiagram) -> Value {
    json!({
        "name": d.name,
        "objects": d.objects.iter().map(group).collect::<Vec<_>>(),
        "morphisms": d.morphisms.iter().map(|m| json!({
            "src": num(m.src),
            "dst": num(m.dst),
            "gen_images": m.gen_images.iter().map(perm).collect::<Vec<_>>(),
        })).collect::<Vec<_>>(),
        "order_bound": num(d.order_bound),
    })
}

fn trace(t: &SylowTrace) -> Value {
    json!({
        "m": num(t.m),
        "p": num(t.p),
        "sm_cardinality": num(&t.sm_cardinality),
        "coset_cardinality": num(&t.coset_cardinality),
        "in_limit": t.in_limit,
        "rows": t.rows.iter().map(|r| json!({
            "class": num(r.class),
            "subgroup_order": num(r.subgroup_order),
            "char_sm_shifted": num(&r.full),
            "char_sylow_shifted": num(&r.mod_sylow),
            "admissible": r.admissible,
            "is_p_group": r.is_p_group,
        })).collect::<Vec<_>>(),
        "conclusion_holds": t.conclusion_holds,
        "conclusion": t.conclusion,
    })
}

pub fn condition3(d: &FamilyDiagram, r: &Condition3Report) -> Value {
    let mut out = Map::new();
    out.insert("family".into(), Value::String(d.name.clone()));
    out.insert("object".into(), num(r.object));
    out.insert("object_order".into(), num(d.objects[r.object].order()));
    out.insert("verdict".into(), Value::String(if r.pass() { "PASS" } else { "FAIL" }.into()));
    out.insert("image_generators".into(), Value::Array(r.image_generators.iter().map(element).collect()));
    out.insert("image_is_whole_ideal".into(), Value::Bool(r.image_is_whole_ideal));
    out.insert("primes".into(), nums(r.primes.iter()));
    out.insert("witness_prime".into(), num(r.witness_prime));
    out.insert(
        "labels".into(),
        Value::Array(
            r.labels
                .iter()
                .map(|l| {
                    json!({
                        "class": num(l.label.class),
                        "p": num(l.label.p),
                        "subgroup_order": num(l.subgroup_order),
                        "contains_image": l.contains_image,
                        "contains_ideal": l.contains_ideal,
                        "holds": l.holds(),
                    })
                })
                .collect(),
        ),
    );
    out.insert("trace".into(), trace(&r.trace));
    out.insert(
        "diagram".into(),
        json!({
            "object_orders": nums(d.objects.iter().map(|g| g.order())),
            "morphisms": nums(d.morphisms.iter().map(|m| format!("{}->{}", m.src, m.dst))),
            "order_bound": num(d.order_bound),
        }),
    );
    Value::Object(out)
}

pub fn error(code: &str, message: &str) -> Value {
    json!({ "error": { "code": code, "message": message } })
}

pub fn big(x: &BigInt) -> Value {
    num(x)
}
