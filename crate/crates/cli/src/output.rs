use clusterpic_core::{Algebra, ClusterObject, Error};
use serde_json::{json, Value};

pub const SCHEMA: &str = "clusterpic/v1";

pub fn envelope(command: &str, quiver: Option<&Algebra>, result: Value) -> Value {
    let mut v = json!({ "schema": SCHEMA, "command": command });
    if let Some(a) = quiver {
        v["quiver"] = json!(a.quiver().to_string());
        v["type"] = json!(a.quiver().type_name());
    }
    v["result"] = result;
    v
}

pub fn error_json(e: &Error) -> String {
    json!({ "schema": SCHEMA, "error": { "kind": e.kind(), "message": e.to_string() } }).to_string()
}

pub fn object(a: &Algebra, x: ClusterObject) -> Value {
    json!({ "name": a.name(x), "root": a.root(x.root_id()), "shifted": x.is_shifted() })
}

pub fn objects(a: &Algebra, xs: &[ClusterObject]) -> Value {
    Value::Array(xs.iter().map(|&x| object(a, x)).collect())
}

pub fn roots(a: &Algebra, ids: impl IntoIterator<Item = usize>) -> Value {
    Value::Array(ids.into_iter().map(|r| json!(a.root(r))).collect())
}
