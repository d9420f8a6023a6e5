//! JSON schema for emitted signatures:
//! `{"d", "n", "m", "max_weight", "coefficients": {word: value}}` with
//! coefficient keys in canonical word order. Exact values are emitted as
//! `"p"` / `"p/q"` strings to avoid precision loss; float values as JSON
//! numbers.

use anyhow::{anyhow, bail, Result};
use serde_json::{json, Map, Value};

use qsig_core::{
    parse_word, rat_string, DualFunctional, Rat, Scalar, ScalarKind, Signature, Word,
};

fn scalar_value(s: &Scalar) -> Value {
    match s {
        Scalar::Exact(r) => Value::String(rat_string(r)),
        Scalar::Float(f) => json!(f),
    }
}

/// Renders a signature document, optionally restricted to the given words
/// (the empty word is always present).
pub fn emit(sig: &Signature, restrict: Option<&[Word]>) -> String {
    let functional = sig.functional();
    let mut coefficients = Map::new();
    coefficients.insert(
        "e".to_string(),
        scalar_value(&functional.coeff(&Word::empty()).expect("e within truncation")),
    );
    match restrict {
        None => {
            for (w, c) in functional.iter() {
                if w.is_empty() {
                    continue;
                }
                coefficients.insert(w.to_string(), scalar_value(c));
            }
        }
        Some(words) => {
            let mut sorted: Vec<&Word> = words.iter().filter(|w| !w.is_empty()).collect();
            sorted.sort();
            sorted.dedup();
            for w in sorted {
                let c = functional.coeff(w).expect("validated against truncation");
                coefficients.insert(w.to_string(), scalar_value(&c));
            }
        }
    }
    let (n, m) = sig.window();
    let doc = json!({
        "d": functional.alphabet(),
        "n": n,
        "m": m,
        "max_weight": functional.max_weight(),
        "coefficients": Value::Object(coefficients),
    });
    serde_json::to_string_pretty(&doc).expect("serializable document")
}

fn u64_field(doc: &Map<String, Value>, name: &str) -> Result<u64> {
    doc.get(name)
        .and_then(Value::as_u64)
        .ok_or_else(|| anyhow!("signature file: missing or invalid field {name:?}"))
}

/// Loads a signature document. The scalar kind is inferred from the
/// coefficient values; strings and numbers must not mix.
pub fn load(text: &str) -> Result<(DualFunctional, usize, usize)> {
    let doc: Value = serde_json::from_str(text)?;
    let doc = doc
        .as_object()
        .ok_or_else(|| anyhow!("signature file: expected a JSON object"))?;
    let d = u64_field(doc, "d")? as u32;
    let n = u64_field(doc, "n")? as usize;
    let m = u64_field(doc, "m")? as usize;
    let max_weight = u64_field(doc, "max_weight")? as u32;
    let coefficients = doc
        .get("coefficients")
        .and_then(Value::as_object)
        .ok_or_else(|| anyhow!("signature file: missing coefficients object"))?;

    let mut kind = None;
    let mut functional = DualFunctional::zero(d, max_weight, ScalarKind::Exact);
    for (key, value) in coefficients {
        let word = parse_word(key, d).map_err(|e| anyhow!("coefficient key {key:?}: {e}"))?;
        let scalar = match value {
            Value::String(text) => Scalar::Exact(
                text.parse::<Rat>()
                    .map_err(|_| anyhow!("coefficient {key:?}: {text:?} is not a rational"))?,
            ),
            Value::Number(number) => Scalar::Float(
                number
                    .as_f64()
                    .ok_or_else(|| anyhow!("coefficient {key:?}: not a float"))?,
            ),
            _ => bail!("coefficient {key:?}: expected a string or number"),
        };
        match kind {
            None => {
                kind = Some(scalar.kind());
                if scalar.kind() == ScalarKind::Float {
                    functional = DualFunctional::zero(d, max_weight, ScalarKind::Float);
                }
            }
            Some(k) if k != scalar.kind() => {
                bail!("signature file mixes exact and float coefficients")
            }
            Some(_) => {}
        }
        functional.set_coeff(word, scalar)?;
    }
    Ok((functional, n, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use qsig_core::{iterated_sums_signature, rat_int, TimeSeries};

    #[test]
    fn round_trip() {
        let x = TimeSeries::from_rows(vec![
            vec![Scalar::Exact(rat_int(0))],
            vec![Scalar::Exact(rat_int(1))],
            vec![Scalar::Exact(rat_int(3))],
        ])
        .unwrap();
        let sig = iterated_sums_signature(&x, 0, 2, 2).unwrap();
        let text = emit(&sig, None);
        let (loaded, n, m) = load(&text).unwrap();
        assert_eq!(&loaded, sig.functional());
        assert_eq!((n, m), (0, 2));
    }

    #[test]
    fn mixing_kinds_is_rejected() {
        let text = r#"{"d":1,"n":0,"m":1,"max_weight":1,
            "coefficients":{"e":"1","[1]":0.5}}"#;
        let err = load(text).unwrap_err().to_string();
        assert!(err.contains("mixes"), "{err}");
    }
}
