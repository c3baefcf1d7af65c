use std::fs;

use clusterpic_core::picture::{abelianization_rank, check_stasheff};
use clusterpic_core::render::RenderSpec;
use clusterpic_core::{parse_quiver, Algebra, ClusterMorphism, ClusterObject, Error, Result, RootSet, WideSubcategory};
use num_rational::Ratio;
use serde_json::{json, Value};

use crate::output::{envelope, object, objects, roots};
use crate::{Command, ComplexKind, DrawFormat, ExcMode, QuiverArgs, SignedMode};

fn algebra(q: &QuiverArgs) -> Result<Algebra> {
    let spec = match (&q.quiver, &q.arrows) {
        (Some(s), None) => s.clone(),
        (None, Some(arrows)) => arrows.clone(),
        (Some(s), Some(arrows)) => {
            let tag = s.split(':').next().unwrap_or("").trim();
            format!("{tag}: {arrows}")
        }
        (None, None) => return Err(Error::InvalidInput("give --quiver or --arrows".into())),
    };
    Algebra::with_field_order(parse_quiver(&spec)?, q.field_order)
}

fn split_coords(s: &str) -> Vec<&str> {
    s.split(',').map(str::trim).filter(|t| !t.is_empty()).collect()
}

fn parse_modules(a: &Algebra, s: &str) -> Result<Vec<usize>> {
    a.parse_objects(s)?
        .into_iter()
        .map(|x| match x {
            ClusterObject::Module(r) => Ok(r),
            ClusterObject::Shifted(_) => Err(Error::InvalidInput(format!("{} is shifted", a.name(x)))),
        })
        .collect()
}

fn required<'a>(v: &'a Option<String>, flag: &str) -> Result<&'a str> {
    v.as_deref().ok_or_else(|| Error::InvalidInput(format!("this mode needs --{flag}")))
}

fn module_seq(a: &Algebra, seq: &[usize]) -> Value {
    Value::Array(seq.iter().map(|&r| object(a, ClusterObject::Module(r))).collect())
}

fn wide_json(a: &Algebra, w: &WideSubcategory) -> Value {
    json!({
        "rank": w.rank(),
        "roots": roots(a, w.roots.iter()),
        "simples": roots(a, w.simples.iter().copied()),
        "projectives": roots(a, w.projectives.iter().copied()),
    })
}

fn roots_of(a: &Algebra, s: RootSet) -> Value {
    roots(a, s.iter())
}

fn morphism_json(a: &Algebra, m: &ClusterMorphism) -> Value {
    json!({
        "source": roots_of(a, m.source),
        "objects": objects(a, &m.objects),
        "target": roots_of(a, m.target),
    })
}

fn parse_point(s: &str) -> Result<Vec<Ratio<i64>>> {
    split_coords(s)
        .into_iter()
        .map(|t| t.parse::<Ratio<i64>>().map_err(|_| Error::Parse(format!("bad coordinate {t:?}"))))
        .collect()
}

fn parse_pole(s: &str) -> Result<[f64; 3]> {
    let v: Vec<f64> = split_coords(s)
        .into_iter()
        .map(|t| t.parse::<f64>().map_err(|_| Error::Parse(format!("bad coordinate {t:?}"))))
        .collect::<Result<_>>()?;
    <[f64; 3]>::try_from(v).map_err(|_| Error::InvalidInput("pole needs three coordinates".into()))
}

fn emit(q: &QuiverArgs, text: &str) -> Result<()> {
    match &q.output {
        Some(path) => fs::write(path, text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_json(q: &QuiverArgs, command: &str, a: &Algebra, result: Value) -> Result<()> {
    let mut text = envelope(command, Some(a), result).to_string();
    text.push('\n');
    emit(q, &text)
}

pub fn run(cmd: &Command) -> Result<()> {
    match cmd {
        Command::Roots(q) => {
            let a = algebra(q)?;
            emit_json(q, "roots", &a, json!(a.roots()))
        }
        Command::Indecomposables(q) => {
            let a = algebra(q)?;
            let n = a.n();
            let list: Vec<Value> = (0..a.num_roots())
                .map(|r| {
                    json!({
                        "name": a.root_name(r),
                        "root": a.root(r),
                        "g": a.g_vector(ClusterObject::Module(r)),
                        "simple": (0..n).any(|v| a.simple(v) == r),
                        "projective": (0..n).any(|v| a.projective(v) == r),
                        "injective": (0..n).any(|v| a.injective(v) == r),
                    })
                })
                .collect();
            emit_json(q, "indecomposables", &a, Value::Array(list))
        }
        Command::Clusters(q) => {
            let a = algebra(q)?;
            let cs = a.all_clusters(a.full())?;
            emit_json(q, "clusters", &a, Value::Array(cs.iter().map(|c| objects(&a, c)).collect()))
        }
        Command::Fan(q) => {
            let a = algebra(q)?;
            let fan = a.build_fan()?;
            let rays: Vec<Value> = fan.rays.iter().map(|(x, g)| json!({ "object": object(&a, *x), "g": g })).collect();
            let chambers: Vec<Value> = (0..fan.clusters.len())
                .map(|c| json!({ "objects": objects(&a, &fan.clusters[c]), "point": fan.chamber_point(&a, c) }))
                .collect();
            let facets: Vec<Value> = fan
                .facets
                .iter()
                .map(|f| {
                    json!({
                        "shared": objects(&a, &f.shared),
                        "negative": f.negative,
                        "positive": f.positive,
                        "label": object(&a, ClusterObject::Module(f.label)),
                    })
                })
                .collect();
            emit_json(q, "fan", &a, json!({ "rays": rays, "chambers": chambers, "facets": facets }))
        }
        Command::Wide { q, perp } => {
            let a = algebra(q)?;
            let result = match perp {
                Some(s) => {
                    let xs = a.parse_objects(s)?;
                    wide_json(&a, &a.perp(&a.module_category(), &xs)?)
                }
                None => Value::Array(a.all_wide_subcategories()?.iter().map(|w| wide_json(&a, w)).collect()),
            };
            emit_json(q, "wide", &a, result)
        }
        Command::ExcSeq { q, mode, seq, length } => {
            let a = algebra(q)?;
            let result = match mode {
                ExcMode::Enumerate => {
                    let len = length.unwrap_or(a.n());
                    if len > a.n() {
                        return Err(Error::InvalidInput(format!("length {len} exceeds the rank")));
                    }
                    Value::Array(a.exceptional_sequences(len).iter().map(|s| module_seq(&a, s)).collect())
                }
                ExcMode::Validate => {
                    let s = parse_modules(&a, required(seq, "seq")?)?;
                    json!({ "sequence": module_seq(&a, &s), "valid": a.is_exceptional(&s) })
                }
                ExcMode::Complete => {
                    let s = parse_modules(&a, required(seq, "seq")?)?;
                    module_seq(&a, &a.complete_on_left(&s)?)
                }
            };
            emit_json(q, "exc-seq", &a, result)
        }
        Command::SignedExcSeq { q, mode, seq, cluster } => {
            let a = algebra(q)?;
            let result = match mode {
                SignedMode::Enumerate => {
                    Value::Array(a.complete_signed_sequences().iter().map(|s| objects(&a, s)).collect())
                }
                SignedMode::Validate => {
                    let s = a.parse_objects(required(seq, "seq")?)?;
                    let perps = a.signed_sequence_perps(a.full(), &s);
                    json!({
                        "sequence": objects(&a, &s),
                        "valid": perps.is_ok(),
                        "complete": perps.as_ref().is_ok_and(|p| p.last().is_some_and(|w| w.is_empty())),
                    })
                }
                SignedMode::ToCluster => {
                    let s = a.parse_objects(required(seq, "seq")?)?;
                    objects(&a, &a.to_ordered_cluster(&s)?)
                }
                SignedMode::FromCluster => {
                    let c = a.parse_objects(required(cluster, "cluster")?)?;
                    objects(&a, &a.from_ordered_cluster(&c)?)
                }
                SignedMode::Factor => {
                    let c = a.parse_objects(required(cluster, "cluster")?)?;
                    let m = a.morphism(a.full(), c)?;
                    Value::Array(a.factorizations(&m)?.iter().map(|s| objects(&a, s)).collect())
                }
            };
            emit_json(q, "signed-exc-seq", &a, result)
        }
        Command::Compose { q, first, second } => {
            let a = algebra(q)?;
            let f = a.morphism(a.full(), a.parse_objects(first)?)?;
            let g = a.morphism(f.target, a.parse_objects(second)?)?;
            let gf = a.compose(&g, &f)?;
            let result = json!({
                "first": morphism_json(&a, &f),
                "second": morphism_json(&a, &g),
                "composite": morphism_json(&a, &gf),
            });
            emit_json(q, "compose", &a, result)
        }
        Command::Braid { q, seq, position, inverse } => {
            let a = algebra(q)?;
            let s = parse_modules(&a, seq)?;
            let t = a.braid_move(&s, *position, *inverse)?;
            emit_json(q, "braid", &a, module_seq(&a, &t))
        }
        Command::PictureGroup { q, stasheff } => {
            if let Some(n) = stasheff {
                check_stasheff(*n)?;
                let mut text = envelope("picture-group", None, json!({ "stasheff": n, "matches": true })).to_string();
                text.push('\n');
                return emit(q, &text);
            }
            let a = algebra(q)?;
            let p = a.presentation()?;
            let relations: Vec<Value> = p
                .relations
                .iter()
                .map(|w| Value::Array(w.iter().map(|&(g, e)| json!({ "root": a.root(g), "exponent": e })).collect()))
                .collect();
            let words: Vec<String> = p.relations.iter().map(|w| a.word_to_string(w)).collect();
            let result = json!({
                "generators": roots(&a, p.generators.iter().copied()),
                "relations": relations,
                "words": words,
                "abelianization_rank": abelianization_rank(&p),
            });
            emit_json(q, "picture-group", &a, result)
        }
        Command::Homology { q, complex } => {
            let a = algebra(q)?;
            let cx = match complex {
                ComplexKind::Cubical => a.cubical_complex()?,
                ComplexKind::Nerve => a.nerve_complex()?,
            };
            emit_json(q, "homology", &a, serde_json::to_value(cx.homology()).expect("serializable"))
        }
        Command::Torsion { q, point } => {
            let a = algebra(q)?;
            let members = |s: RootSet| Value::Array(s.iter().map(|r| object(&a, ClusterObject::Module(r))).collect());
            let result = match point {
                Some(p) => {
                    let t = a.torsion_class_of_point(&parse_point(p)?)?;
                    json!({ "members": members(t.roots) })
                }
                None => {
                    let fan = a.build_fan()?;
                    let h = a.torsion_hasse_of(&fan)?;
                    let classes: Vec<Value> = h
                        .classes
                        .iter()
                        .enumerate()
                        .map(|(c, t)| json!({ "chamber": c, "cluster": objects(&a, &fan.clusters[c]), "members": members(t.roots) }))
                        .collect();
                    let edges: Vec<Value> = h
                        .edges
                        .iter()
                        .map(|e| json!({ "from": e.from, "to": e.to, "label": object(&a, ClusterObject::Module(e.label)) }))
                        .collect();
                    json!({ "classes": classes, "edges": edges })
                }
            };
            emit_json(q, "torsion", &a, result)
        }
        Command::Draw { q, format, pole, samples, chamber_labels, size } => {
            let a = algebra(q)?;
            let mut spec = RenderSpec {
                samples: *samples,
                chamber_labels: *chamber_labels,
                size: *size,
                ..RenderSpec::default()
            };
            if let Some(p) = pole {
                spec.pole = parse_pole(p)?;
            }
            let text = match format {
                DrawFormat::Svg => a.draw_svg(&spec)?,
                DrawFormat::Tikz => a.draw_tikz(&spec)?,
            };
            match &q.output {
                Some(path) => {
                    fs::write(path, &text).map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                    let result = json!({ "path": path.display().to_string(), "bytes": text.len() });
                    println!("{}", envelope("draw", Some(&a), result));
                    Ok(())
                }
                None => emit(q, &text),
            }
        }
    }
}
