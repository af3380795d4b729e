use std::io::Write;

use lamb_core::{classify_regularity, DispersionRelation, Model, RegularityReport};
use serde::{Deserialize, Serialize};

use crate::args::CatalogArgs;
use crate::error::{CliError, CliResult};
use crate::output::json_string;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub relation: DispersionRelation,
    pub formula: String,
    pub asymptotic_exponent: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bidirectional: Option<RegularityReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub unidirectional: Option<RegularityReport>,
}

/// Catalog entries with default parameters; `model` restricts the
/// classification to one model.
pub fn catalog_entries(model: Option<Model>) -> Vec<CatalogEntry> {
    let wants = |m: Model| model.is_none_or(|only| only == m);
    DispersionRelation::catalog()
        .into_iter()
        .map(|rel| CatalogEntry {
            formula: rel.formula().to_string(),
            asymptotic_exponent: rel.asymptotic_exponent(),
            bidirectional: wants(Model::Bidirectional)
                .then(|| classify_regularity(&rel, Model::Bidirectional)),
            unidirectional: wants(Model::Unidirectional)
                .then(|| classify_regularity(&rel, Model::Unidirectional)),
            relation: rel,
        })
        .collect()
}

pub fn run(args: &CatalogArgs, out: &mut dyn Write) -> CliResult<()> {
    let entries = catalog_entries(args.model.map(Model::from));
    let text = if args.json {
        json_string(&entries)
    } else {
        render(&entries)
    };
    out.write_all(text.as_bytes())
        .map_err(|e| CliError::io("<stdout>", e))
}

fn render(entries: &[CatalogEntry]) -> String {
    let mut s = format!(
        "{:<24} {:<40} {:<28} {:>5}  {:<24} {:<24}\n",
        "name", "formula", "defaults", "m", "bidirectional", "unidirectional"
    );
    for e in entries {
        let defaults = e
            .relation
            .params()
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let class =
            |r: &Option<RegularityReport>| r.map_or("-".to_string(), |r| r.class.to_string());
        s.push_str(&format!(
            "{:<24} {:<40} {:<28} {:>5}  {:<24} {:<24}\n",
            e.relation.name(),
            e.formula,
            if defaults.is_empty() {
                "-".into()
            } else {
                defaults
            },
            e.asymptotic_exponent,
            class(&e.bidirectional),
            class(&e.unidirectional),
        ));
    }
    s
}
