//! JSON formats for automata, semilinear sets and masked semilinear sets,
//! and DOT export.
//!
//! Vectors are written as objects keyed by letter, in alphabet order, and the
//! value `∞` of a mask is the string `"inf"`:
//!
//! ```json
//! {"alphabet":["a","b"],
//!  "components":[{"mask":{"a":0,"b":"inf"},
//!                 "set":{"alphabet":["a","b"],
//!                        "components":[{"base":{"a":1,"b":0},"periods":[{"a":1,"b":0}]}]}}]}
//! ```

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::automata::{Alphabet, Automaton};
use crate::error::{Error, Result};
use crate::masked::{Mask, MaskedSemilinearSet};
use crate::semilinear::{FinVector, LinearSet, SemilinearSet};

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct AutomatonJson {
    alphabet: Vec<String>,
    states: Vec<String>,
    initial: Vec<String>,
    accepting: Vec<String>,
    transitions: Vec<TransitionJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct TransitionJson {
    from: String,
    letter: String,
    to: String,
}

fn alphabet_to_json(alphabet: &Alphabet) -> Vec<String> {
    alphabet.letters().iter().map(char::to_string).collect()
}

fn alphabet_from_json(letters: &[String]) -> Result<Alphabet> {
    let chars = letters
        .iter()
        .map(|s| single_char(s))
        .collect::<Result<Vec<_>>>()?;
    Alphabet::new(chars)
}

fn single_char(s: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) => Ok(c),
        _ => Err(Error::InvalidAlphabet(format!(
            "letters must be single characters, got {s:?}"
        ))),
    }
}

pub fn automaton_to_json(a: &Automaton) -> String {
    let doc = AutomatonJson {
        alphabet: alphabet_to_json(a.alphabet()),
        states: a.names().to_vec(),
        initial: a.initial().iter().map(|&q| a.name(q).to_string()).collect(),
        accepting: a
            .accepting()
            .iter()
            .map(|&q| a.name(q).to_string())
            .collect(),
        transitions: a
            .transitions()
            .map(|(q, l, p)| TransitionJson {
                from: a.name(q).to_string(),
                letter: a.alphabet().char_of(l).to_string(),
                to: a.name(p).to_string(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn automaton_from_json(text: &str) -> Result<Automaton> {
    let doc: AutomatonJson = serde_json::from_str(text)?;
    let alphabet = alphabet_from_json(&doc.alphabet)?;
    let edges = doc
        .transitions
        .iter()
        .map(|t| Ok((t.from.clone(), single_char(&t.letter)?, t.to.clone())))
        .collect::<Result<Vec<_>>>()?;
    Automaton::from_parts(alphabet, &doc.states, &doc.initial, &doc.accepting, &edges)
}

fn vector_to_json(alphabet: &Alphabet, v: &FinVector) -> Value {
    let mut m = Map::new();
    for (c, &x) in alphabet.letters().iter().zip(v.iter()) {
        m.insert(c.to_string(), Value::from(x));
    }
    Value::Object(m)
}

/// Reads a letter-keyed object; absent letters count as 0.
fn vector_from_json(alphabet: &Alphabet, value: &Value) -> Result<FinVector> {
    let obj = value
        .as_object()
        .ok_or_else(|| Error::InvalidSet(format!("expected a vector object, got {value}")))?;
    let mut v = vec![0u64; alphabet.len()];
    for (k, x) in obj {
        let l = alphabet.index_of(single_char(k)?)?;
        v[l] = x.as_u64().ok_or_else(|| {
            Error::InvalidSet(format!("entry {k:?} must be a natural number, got {x}"))
        })?;
    }
    Ok(FinVector::new(v))
}

fn semilinear_value(alphabet: &Alphabet, s: &SemilinearSet) -> Value {
    let components: Vec<Value> = s
        .components()
        .iter()
        .map(|c| {
            serde_json::json!({
                "base": vector_to_json(alphabet, c.base()),
                "periods": c.periods().iter().map(|p| vector_to_json(alphabet, p)).collect::<Vec<_>>(),
            })
        })
        .collect();
    serde_json::json!({ "alphabet": alphabet_to_json(alphabet), "components": components })
}

fn field<'a>(obj: &'a Value, key: &str) -> Result<&'a Value> {
    obj.get(key)
        .ok_or_else(|| Error::InvalidSet(format!("missing field {key:?}")))
}

fn array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array()
        .ok_or_else(|| Error::InvalidSet(format!("{what} must be an array")))
}

fn alphabet_of(doc: &Value) -> Result<Alphabet> {
    let letters: Vec<String> = serde_json::from_value(field(doc, "alphabet")?.clone())?;
    alphabet_from_json(&letters)
}

fn semilinear_from_value(doc: &Value) -> Result<(Alphabet, SemilinearSet)> {
    let alphabet = alphabet_of(doc)?;
    let mut comps = Vec::new();
    for c in array(field(doc, "components")?, "components")? {
        let base = vector_from_json(&alphabet, field(c, "base")?)?;
        let periods = array(field(c, "periods")?, "periods")?
            .iter()
            .map(|p| vector_from_json(&alphabet, p))
            .collect::<Result<Vec<_>>>()?;
        comps.push(LinearSet::new(base, periods)?);
    }
    let s = SemilinearSet::new(alphabet.len(), comps)?;
    Ok((alphabet, s))
}

pub fn semilinear_to_json(alphabet: &Alphabet, s: &SemilinearSet) -> String {
    serde_json::to_string_pretty(&semilinear_value(alphabet, s)).expect("serializable")
}

pub fn semilinear_from_json(text: &str) -> Result<(Alphabet, SemilinearSet)> {
    semilinear_from_value(&serde_json::from_str(text)?)
}

pub fn masked_to_json(m: &MaskedSemilinearSet) -> String {
    let alphabet = m.alphabet();
    let components: Vec<Value> = m
        .components()
        .iter()
        .map(|(mask, s)| {
            let mut mv = Map::new();
            for (l, c) in alphabet.letters().iter().enumerate() {
                let x = if mask.is_inf(l) {
                    Value::from("inf")
                } else {
                    Value::from(0)
                };
                mv.insert(c.to_string(), x);
            }
            serde_json::json!({ "mask": Value::Object(mv), "set": semilinear_value(alphabet, s) })
        })
        .collect();
    let doc =
        serde_json::json!({ "alphabet": alphabet_to_json(alphabet), "components": components });
    serde_json::to_string_pretty(&doc).expect("serializable")
}

pub fn masked_from_json(text: &str) -> Result<MaskedSemilinearSet> {
    let doc: Value = serde_json::from_str(text)?;
    let alphabet = alphabet_of(&doc)?;
    let mut parts = Vec::new();
    for c in array(field(&doc, "components")?, "components")? {
        let mv = field(c, "mask")?
            .as_object()
            .ok_or_else(|| Error::InvalidSet("mask must be an object".into()))?;
        let mut inf = vec![false; alphabet.len()];
        for (k, x) in mv {
            let l = alphabet.index_of(single_char(k)?)?;
            inf[l] = match x {
                Value::String(s) if s == "inf" => true,
                Value::Number(n) if n.as_u64() == Some(0) => false,
                other => {
                    return Err(Error::InvalidSet(format!(
                        "mask entries are 0 or \"inf\", got {other}"
                    )))
                }
            };
        }
        let (inner, s) = semilinear_from_value(field(c, "set")?)?;
        alphabet.ensure_same(&inner)?;
        parts.push((Mask::new(inf)?, s));
    }
    MaskedSemilinearSet::new(alphabet, parts)
}

/// Graphviz rendering; accepting states are double circles and initial
/// states get an arrow from an invisible node.
pub fn to_dot(a: &Automaton) -> String {
    let mut out = String::from("digraph automaton {\n  rankdir=LR;\n");
    for q in a.states() {
        let shape = if a.is_accepting(q) {
            "doublecircle"
        } else {
            "circle"
        };
        let _ = writeln!(out, "  {q} [label={:?}, shape={shape}];", a.name(q));
    }
    for &q in a.initial() {
        let _ = writeln!(
            out,
            "  init{q} [shape=point, style=invis];\n  init{q} -> {q};"
        );
    }
    // one edge per state pair, labels joined
    let mut edges: std::collections::BTreeMap<(usize, usize), Vec<char>> = Default::default();
    for (q, l, p) in a.transitions() {
        edges
            .entry((q, p))
            .or_default()
            .push(a.alphabet().char_of(l));
    }
    for ((q, p), letters) in edges {
        let label: String = letters
            .iter()
            .map(char::to_string)
            .collect::<Vec<_>>()
            .join(",");
        let _ = writeln!(out, "  {q} -> {p} [label={label:?}];");
    }
    out.push_str("}\n");
    out
}
