//! Report rendering: a stable human-readable text format and JSON, both
//! derived from the same report objects so identical inputs produce
//! byte-identical output.

use serde::Serialize;

use crate::catalog::CatalogEntry;
use crate::classify::{Certificate, ClassificationReport, Status};
use crate::theorems::{CheckStatus, TheoremCheck};

/// Output encoding selected by --format.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

fn entries_line<T: std::fmt::Display>(items: &[T]) -> String {
    let shown: Vec<String> = items.iter().map(|t| t.to_string()).collect();
    shown.join(", ")
}

fn cert_text(cert: &Certificate) -> String {
    match cert {
        Certificate::Element { x } => format!("element x = {x}"),
        Certificate::Pair { x, y } => format!("pair (x, y) = ({x}, {y})"),
        Certificate::ProjPair { e, f } => format!("projection pair (e, f) = ({e}, {f})"),
        Certificate::RickartMap {
            total,
            entries,
            truncated,
        } => {
            let body = entries
                .iter()
                .map(|(x, g)| format!("{x} -> g={g}"))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "generator map over {total} elements: {body}{}",
                if *truncated { ", ..." } else { "" }
            )
        }
        Certificate::GenRickartMap {
            total,
            entries,
            truncated,
        } => {
            let body = entries
                .iter()
                .map(|(x, n, g)| format!("{x} -> (n={n}, g={g})"))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "generator map over {total} elements: {body}{}",
                if *truncated { ", ..." } else { "" }
            )
        }
        Certificate::GrpMap {
            total,
            entries,
            truncated,
        } => {
            let body = entries
                .iter()
                .map(|(x, e, n)| format!("{x} -> (e={e}, n={n})"))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "GRP map over {total} elements: {body}{}",
                if *truncated { ", ..." } else { "" }
            )
        }
        Certificate::PairMap {
            total,
            entries,
            truncated,
        } => {
            let body = entries
                .iter()
                .map(|(e, f, w)| format!("({e}, {f}) -> {w}"))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "witness map over {total} pairs: {body}{}",
                if *truncated { ", ..." } else { "" }
            )
        }
        Certificate::SubprojMap {
            total,
            entries,
            truncated,
        } => {
            let body = entries
                .iter()
                .map(|(e, f, e0, f0)| format!("({e}, {f}) -> (e0={e0}, f0={f0})"))
                .collect::<Vec<_>>()
                .join(", ");
            format!(
                "subprojection map over {total} pairs: {body}{}",
                if *truncated { ", ..." } else { "" }
            )
        }
        Certificate::Count { checked } => format!("{checked} instances checked"),
    }
}

/// Render a classification report in the stable text layout.
pub fn classification_text(rep: &ClassificationReport) -> String {
    let mut out = String::new();
    let mut push = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    push(format!("ring: {}", rep.name));
    push(format!("construction: {}", rep.construction));
    push(format!("size: {}", rep.size));
    push(format!(
        "unity: {}",
        rep.unity.map_or("absent".to_string(), |u| u.to_string())
    ));
    match (&rep.projections, rep.projection_count) {
        (Some(projs), _) => push(format!(
            "projections ({}): [{}]",
            projs.len(),
            entries_line(projs)
        )),
        (None, Some(count)) => push(format!("projections: {count} (list withheld)")),
        (None, None) => push("projections: not enumerated (witness mode)".to_string()),
    }
    push("properties:".to_string());
    for p in &rep.properties {
        let verdict = match p.status {
            Status::True => "true",
            Status::False => "false",
            Status::Skipped => "skipped",
        };
        push(format!("  {}: {verdict}", p.property));
        if let Some(w) = &p.witness {
            push(format!("    witness: {}", cert_text(w)));
        }
        if let Some(c) = &p.counterexample {
            push(format!("    counterexample: {}", cert_text(c)));
        }
        if let Some(n) = &p.note {
            push(format!("    note: {n}"));
        }
    }
    if !rep.notes.is_empty() {
        push("notes:".to_string());
        for n in &rep.notes {
            push(format!("  - {n}"));
        }
    }
    if !rep.deviations.is_empty() {
        push("deviations:".to_string());
        for d in &rep.deviations {
            push(format!("  - {d}"));
        }
    }
    out
}

/// Render a theorem ledger in the stable text layout, with a final tally.
pub fn ledger_text(ring_name: &str, checks: &[TheoremCheck]) -> String {
    let mut out = String::new();
    out.push_str(&format!("ring: {ring_name}\n"));
    let mut tally = [0u32; 4];
    for c in checks {
        let (label, slot) = match c.status {
            CheckStatus::Pass => ("pass", 0),
            CheckStatus::Fail => ("FAIL", 1),
            CheckStatus::HypothesisNotMet => ("hypothesis-not-met", 2),
            CheckStatus::SkippedTooLarge => ("skipped-too-large", 3),
        };
        tally[slot] += 1;
        out.push_str(&format!("check {} [{}] {}\n", c.id, label, c.title));
        if !c.detail.is_empty() {
            out.push_str(&format!("    {}\n", c.detail));
        }
        if let Some(ce) = &c.counterexample {
            out.push_str(&format!("    counterexample: {}\n", cert_text(ce)));
        }
    }
    out.push_str(&format!(
        "result: {} pass, {} fail, {} hypothesis-not-met, {} skipped\n",
        tally[0], tally[1], tally[2], tally[3]
    ));
    out
}

/// Render the catalog listing.
pub fn catalog_text(entries: &[CatalogEntry]) -> String {
    let mut out = String::new();
    for e in entries {
        out.push_str(&format!(
            "{:<16} {}{}\n",
            e.name,
            e.summary,
            if e.witness_mode { " [witness-mode]" } else { "" }
        ));
        let frags: Vec<String> = e
            .expected
            .iter()
            .map(|(p, v)| format!("{p}: {v}"))
            .collect();
        if !frags.is_empty() {
            out.push_str(&format!("{:<16}   expected: {}\n", "", frags.join(", ")));
        }
        out.push_str(&format!("{:<16}   {}\n", "", e.provenance));
    }
    out
}

#[derive(Serialize)]
struct LedgerJson<'a> {
    ring: &'a str,
    checks: &'a [TheoremCheck],
}

pub fn render_classification(rep: &ClassificationReport, format: Format) -> String {
    match format {
        Format::Text => classification_text(rep),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(rep).expect("report serializes");
            s.push('\n');
            s
        }
    }
}

pub fn render_ledger(ring_name: &str, checks: &[TheoremCheck], format: Format) -> String {
    match format {
        Format::Text => ledger_text(ring_name, checks),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&LedgerJson {
                ring: ring_name,
                checks,
            })
            .expect("ledger serializes");
            s.push('\n');
            s
        }
    }
}

pub fn render_catalog(entries: &[CatalogEntry], format: Format) -> String {
    match format {
        Format::Text => catalog_text(entries),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(entries).expect("catalog serializes");
            s.push('\n');
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classify::classify_named;
    use crate::ring::{build_ring, ConstructionSpec};

    #[test]
    fn text_report_is_stable_across_runs() {
        let r = build_ring(&ConstructionSpec::ZMod(12)).unwrap();
        let a = classification_text(&classify_named(&r, "zmod12".into()).unwrap());
        let b = classification_text(&classify_named(&r, "zmod12".into()).unwrap());
        assert_eq!(a, b);
        assert!(a.contains("projections (4): [0, 1, 4, 9]"), "{a}");
    }

    #[test]
    fn json_report_parses_back() {
        let r = build_ring(&ConstructionSpec::ZMod(4)).unwrap();
        let rep = classify_named(&r, "zmod4".into()).unwrap();
        let json = render_classification(&rep, Format::Json);
        let v: serde_json::Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["name"], "zmod4");
        assert_eq!(v["size"], 4);
    }
}
