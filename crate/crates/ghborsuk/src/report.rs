//! JSON shapes for results printed by the command line tool.

use ghborsuk_core::{BorsukResult, Correspondence, GhResult};
use serde::Serialize;

/// Witness pairs as `[[i, j], ...]`, sorted lexicographically.
pub fn witness_pairs(c: &Correspondence) -> Vec<[usize; 2]> {
    let mut v: Vec<[usize; 2]> = c.pairs().iter().map(|&(i, j)| [i, j]).collect();
    v.sort_unstable();
    v
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct GhJson {
    /// `None` when the search was declined and only bounds are reported.
    pub value: Option<f64>,
    pub method: String,
    pub lower: f64,
    pub upper: f64,
    pub witness: Option<Vec<[usize; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
}

impl From<&GhResult> for GhJson {
    fn from(r: &GhResult) -> Self {
        Self {
            value: Some(r.value),
            method: r.method.as_str().to_owned(),
            lower: r.lower,
            upper: r.upper,
            witness: r.witness.as_ref().map(witness_pairs),
            notice: None,
        }
    }
}

impl GhJson {
    /// The bounds-only answer given when both spaces are too large to search.
    pub fn bounds_only(lower: f64, upper: f64, notice: String) -> Self {
        Self {
            value: None,
            method: "bounds".to_owned(),
            lower,
            upper,
            witness: None,
            notice: Some(notice),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(n) = &self.notice {
            out.push_str(&format!("notice   {n}\n"));
        }
        match self.value {
            Some(v) => out.push_str(&format!("value    {v}\n")),
            None => out.push_str("value    unknown\n"),
        }
        out.push_str(&format!("method   {}\n", self.method));
        out.push_str(&format!("lower    {}\nupper    {}\n", self.lower, self.upper));
        if let Some(w) = &self.witness {
            let pairs: Vec<String> = w.iter().map(|[i, j]| format!("({i},{j})")).collect();
            out.push_str(&format!("witness  {}\n", pairs.join(" ")));
        }
        out
    }
}

#[derive(Debug, Clone, Serialize, PartialEq)]
pub struct BorsukJson {
    pub beta: usize,
    pub witness: Vec<Vec<usize>>,
    pub epsilon: f64,
    pub diam: f64,
}

impl From<&BorsukResult> for BorsukJson {
    fn from(r: &BorsukResult) -> Self {
        Self {
            beta: r.number,
            witness: r.witness.blocks().to_vec(),
            epsilon: r.epsilon,
            diam: r.diam,
        }
    }
}

impl BorsukJson {
    pub fn to_text(&self) -> String {
        let blocks: Vec<String> = self
            .witness
            .iter()
            .map(|b| format!("{{{}}}", b.iter().map(usize::to_string).collect::<Vec<_>>().join(",")))
            .collect();
        format!(
            "beta     {}\nwitness  {}\nepsilon  {}\ndiam     {}\n",
            self.beta,
            blocks.join(" "),
            self.epsilon,
            self.diam
        )
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report values serialize")
}
