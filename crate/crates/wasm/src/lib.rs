//! Browser demo bindings. Each export returns a string; failures come back
//! as a thrown JS error carrying the message.

use clusterpic_core::render::RenderSpec;
use clusterpic_core::{Algebra, ClusterObject};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn names(a: &Algebra, xs: &[ClusterObject]) -> Vec<String> {
    xs.iter().map(|&x| a.name(x)).collect()
}

/// SVG of the wall picture for a quiver of rank at most three.
pub fn picture_svg(quiver: &str, samples: usize, chamber_labels: bool) -> Result<String, String> {
    let a = Algebra::from_spec(quiver).map_err(|e| e.to_string())?;
    let spec = RenderSpec { samples, chamber_labels, ..RenderSpec::default() };
    a.draw_svg(&spec).map_err(|e| e.to_string())
}

/// Clusters of the quiver, each with the signed exceptional sequences that
/// factor the morphism from mod-Λ onto it.
pub fn clusters_with_factorizations(quiver: &str, cluster: &str) -> Result<String, String> {
    let a = Algebra::from_spec(quiver).map_err(|e| e.to_string())?;
    let wrap = |e: clusterpic_core::Error| e.to_string();
    let clusters = if cluster.trim().is_empty() {
        a.all_clusters(a.full()).map_err(wrap)?
    } else {
        vec![a.parse_objects(cluster).map_err(wrap)?]
    };
    let mut out = Vec::new();
    for c in clusters {
        let m = a.morphism(a.full(), c.clone()).map_err(wrap)?;
        let seqs: Vec<Vec<String>> = a.factorizations(&m).map_err(wrap)?.iter().map(|s| names(&a, s)).collect();
        out.push(json!({ "cluster": names(&a, &c), "factorizations": seqs }));
    }
    Ok(Value::Array(out).to_string())
}

/// Betti numbers and torsion of the picture space.
pub fn homology(quiver: &str) -> Result<String, String> {
    let a = Algebra::from_spec(quiver).map_err(|e| e.to_string())?;
    let h = a.cubical_complex().map_err(|e| e.to_string())?.homology();
    Ok(json!({ "type": a.quiver().type_name(), "betti": h.betti, "torsion": h.torsion }).to_string())
}

#[wasm_bindgen(js_name = pictureSvg)]
pub fn picture_svg_js(quiver: &str, samples: usize, chamber_labels: bool) -> Result<String, JsError> {
    picture_svg(quiver, samples, chamber_labels).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = clusters)]
pub fn clusters_js(quiver: &str, cluster: &str) -> Result<String, JsError> {
    clusters_with_factorizations(quiver, cluster).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = homology)]
pub fn homology_js(quiver: &str) -> Result<String, JsError> {
    homology(quiver).map_err(|e| JsError::new(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn svg_for_a3() {
        let svg = picture_svg("A3: 1>2>3", 24, true).unwrap();
        assert!(svg.starts_with("<svg"));
        assert!(picture_svg("A4: 1<2<3<4", 24, false).is_err());
    }

    #[test]
    fn a2_factorizations() {
        let v: Value = serde_json::from_str(&clusters_with_factorizations("A2: 1<2", "").unwrap()).unwrap();
        let list = v.as_array().unwrap();
        assert_eq!(list.len(), 5);
        let total: usize = list.iter().map(|c| c["factorizations"].as_array().unwrap().len()).sum();
        assert_eq!(total, 10);
        assert!(clusters_with_factorizations("A2: 1<2", "S1, S1").is_err());
    }

    #[test]
    fn homology_json() {
        let v: Value = serde_json::from_str(&homology("A3: 1<2<3").unwrap()).unwrap();
        assert_eq!(v["betti"], json!([1, 3, 2, 0]));
    }
}
