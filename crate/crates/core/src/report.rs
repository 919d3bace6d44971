//! Plain-text, CSV and JSON renderings of results.
//!
//! Text tables label barred vertices `i'`; CSV and JSON use `m + i`.

use serde::Serialize;

use crate::betti::BettiTable;
use crate::classify::HomotopyClass;
use crate::homology::{HomologyResult, ReducedBetti};
use crate::io::barred_label;
use crate::subset::VertexSet;
use crate::toric::{HCheckReport, IndexCollections};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

/// Writes CSV records into a string.
pub fn csv_string<R, I>(header: &[&str], rows: I) -> String
where
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
    I: IntoIterator<Item = R>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn json_string(value: &impl Serialize) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// Rows `i`, columns `j`, dots for zeros.
pub fn betti_table_text(t: &BettiTable) -> String {
    let (Some(max_i), Some(max_j)) = (t.max_i(), t.max_j()) else {
        return "(empty table)\n".to_string();
    };
    let width = t
        .iter()
        .map(|(_, v)| v.to_string().len())
        .max()
        .unwrap_or(1)
        .max(max_j.to_string().len())
        + 1;
    let mut out = format!("{:>4}", "i\\j");
    for j in 0..=max_j {
        out.push_str(&format!("{j:>width$}"));
    }
    out.push('\n');
    for i in 0..=max_i {
        out.push_str(&format!("{i:>4}"));
        for j in 0..=max_j {
            let v = t.get(i, j);
            let cell = if v == 0 {
                ".".to_string()
            } else {
                v.to_string()
            };
            out.push_str(&format!("{cell:>width$}"));
        }
        out.push('\n');
    }
    out
}

pub fn betti_table_csv(t: &BettiTable) -> String {
    csv_string(
        &["i", "j", "value"],
        t.iter()
            .map(|((i, j), v)| [i.to_string(), j.to_string(), v.to_string()]),
    )
}

#[derive(Serialize)]
pub struct BettiEntry {
    pub i: usize,
    pub j: usize,
    pub value: u64,
}

pub fn betti_entries(t: &BettiTable) -> Vec<BettiEntry> {
    t.iter()
        .map(|((i, j), value)| BettiEntry { i, j, value })
        .collect()
}

/// `{1,3} {2,4'}`-style facet list on the doubled ground set.
pub fn facet_line(base_m: Option<usize>, facets: &[VertexSet]) -> String {
    facets
        .iter()
        .map(|&f| match base_m {
            Some(m) => barred_label(m, f),
            None => f.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// Space-separated members, for CSV cells.
pub fn members(s: VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn betti_values(b: &ReducedBetti) -> Vec<u64> {
    b.values().to_vec()
}

/// Short description of a class for table and CSV cells.
pub fn class_detail(c: &HomotopyClass) -> String {
    match c {
        HomotopyClass::CrossPolytopeBoundary { rank } => format!("S^{}", *rank as isize - 1),
        HomotopyClass::SphereCodimTwo { rank } => format!("S^{}", *rank as isize - 2),
        HomotopyClass::SuspendedLink { folds, link, .. } => {
            format!("susp^{folds} lk[{}]", facet_line(None, &link.facets()))
        }
        HomotopyClass::Contractible => "point".to_string(),
    }
}

pub fn homology_text(h: &HomologyResult) -> String {
    let mut out = format!("reduced Betti (from degree -1): {}\n", h.reduced_betti);
    if h.torsion.is_empty() {
        out.push_str("torsion: none\n");
    } else {
        for (d, orders) in &h.torsion {
            let parts: Vec<String> = orders.iter().map(|o| format!("Z/{o}")).collect();
            out.push_str(&format!("torsion in H~_{d}: {}\n", parts.join(" + ")));
        }
    }
    out
}

pub fn collections_text(betti: &[u64], c: &IndexCollections) -> String {
    let line: Vec<String> = betti.iter().map(u64::to_string).collect();
    let mut out = format!("betti: {}\n", line.join(" "));
    for (i, members) in c.iter() {
        let list: Vec<String> = members.iter().map(VertexSet::to_string).collect();
        out.push_str(&format!("I_{i} ({}): {}\n", members.len(), list.join(" ")));
    }
    out
}

pub fn hcheck_text(r: &HCheckReport) -> String {
    let h: Vec<String> = r.h.iter().map(i64::to_string).collect();
    let b: Vec<String> = r.betti.iter().map(u64::to_string).collect();
    let mut out = format!("h: {}\nbetti: {}\n", h.join(" "), b.join(" "));
    out.push_str(&format!(
        "{:>3} {:>14} {:>14} {:>4}\n",
        "k", "h2k-h2k-1", "b2k-b2k-1", "ok"
    ));
    for row in &r.rows {
        out.push_str(&format!(
            "{:>3} {:>14} {:>14} {:>4}\n",
            row.k,
            row.h_diff,
            row.betti_diff,
            if row.holds() { "yes" } else { "NO" }
        ));
    }
    out
}
