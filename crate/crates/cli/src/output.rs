//! Serialized output records and renderers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use pathbetti_core::{BettiTable, HomologyVector, Method, PathFamilySpec, PathKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpecEcho {
    pub kind: PathKind,
    pub n: usize,
    pub t: usize,
    pub p: usize,
    pub d: usize,
}

impl From<PathFamilySpec> for SpecEcho {
    fn from(s: PathFamilySpec) -> Self {
        SpecEcho { kind: s.kind(), n: s.n(), t: s.t(), p: s.p(), d: s.d() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryRecord {
    pub i: usize,
    pub j: usize,
    pub value: u64,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiffRecord {
    pub i: usize,
    pub j: usize,
    pub closed: u64,
    pub oracle: u64,
}

/// What `pathbetti betti` prints. Entries are sorted by `(j, i)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub spec: SpecEcho,
    pub method: String,
    pub field_characteristic: u64,
    pub entries: Vec<EntryRecord>,
    pub pd: usize,
    pub reg: usize,
    /// Present only for `--method both`; empty when the tables agree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub diff: Option<Vec<DiffRecord>>,
    pub timing_ms: f64,
}

impl OutputRecord {
    pub fn new(spec: PathFamilySpec, method: &str, characteristic: u64, table: &BettiTable) -> Self {
        OutputRecord {
            spec: spec.into(),
            method: method.to_string(),
            field_characteristic: characteristic,
            entries: table
                .iter()
                .map(|e| EntryRecord { i: e.i, j: e.j, value: e.value, method: e.method })
                .collect(),
            pd: table.projective_dimension(),
            reg: table.regularity(),
            diff: None,
            timing_ms: 0.0,
        }
    }

    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["kind", "n", "t", "i", "j", "beta", "method"])?;
        for e in &self.entries {
            w.serialize((
                self.spec.kind.to_string(),
                self.spec.n,
                self.spec.t,
                e.i,
                e.j,
                e.value,
                e.method.to_string(),
            ))?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }

    /// Betti diagram with rows `j - i` and columns `i`, including `β_{0,0}`.
    pub fn to_pretty(&self) -> String {
        let mut cells: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        cells.insert((0, 0), 1);
        for e in &self.entries {
            cells.insert((e.j - e.i, e.i), e.value);
        }
        let cols = self.pd + 1;
        let totals: Vec<u64> =
            (0..cols).map(|i| cells.iter().filter(|(k, _)| k.1 == i).map(|(_, v)| v).sum()).collect();
        let width = totals.iter().map(|v| v.to_string().len()).max().unwrap_or(1);

        let mut out = String::new();
        let s = &self.spec;
        let _ = writeln!(
            out,
            "R/I_{}({}_{}) over {}: n={} t={} p={} d={}",
            s.t,
            if s.kind == PathKind::Cycle { "C" } else { "L" },
            s.n,
            if self.field_characteristic == 0 { "QQ".to_string() } else { format!("GF({})", self.field_characteristic) },
            s.n,
            s.t,
            s.p,
            s.d
        );
        let row = |label: &str, vals: Vec<String>| {
            let body: Vec<String> = vals.iter().map(|v| format!("{v:>width$}")).collect();
            format!("{label:>7} {}\n", body.join(" "))
        };
        out.push_str(&row("", (0..cols).map(|i| i.to_string()).collect()));
        out.push_str(&row("total:", totals.iter().map(|v| v.to_string()).collect()));
        for r in 0..=self.reg {
            let vals = (0..cols)
                .map(|i| cells.get(&(r, i)).map_or(".".to_string(), |v| v.to_string()))
                .collect();
            out.push_str(&row(&format!("{r}:"), vals));
        }
        let _ = writeln!(out, "pd = {}, reg = {}", self.pd, self.reg);
        if let Some(diff) = &self.diff {
            if diff.is_empty() {
                let _ = writeln!(out, "oracle and closed forms agree");
            } else {
                for d in diff {
                    let _ = writeln!(out, "MISMATCH beta_{{{},{}}}: closed={} oracle={}", d.i, d.j, d.closed, d.oracle);
                }
            }
        }
        out
    }
}

/// What `pathbetti homology` prints.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct HomologyRecord {
    pub t: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub runs: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub spec: Option<SpecEcho>,
    pub field_characteristic: u64,
    pub closed: HomologyVector,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub explicit: Option<HomologyVector>,
    pub agree: bool,
}

impl HomologyRecord {
    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        match (&self.runs, &self.spec) {
            (Some(runs), _) => {
                let parts: Vec<String> = runs.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "E({}) with t={}", parts.join(","), self.t);
            }
            (None, Some(s)) => {
                let _ = writeln!(out, "complement of Delta_{}(C_{}), p={} d={}", s.t, s.n, s.p, s.d);
            }
            (None, None) => {}
        }
        let _ = writeln!(out, "closed:   {}", self.closed);
        if let Some(e) = &self.explicit {
            let _ = writeln!(out, "explicit: {e}");
            let _ = writeln!(out, "{}", if self.agree { "agree" } else { "MISMATCH" });
        }
        out
    }
}
