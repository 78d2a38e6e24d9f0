//! Orbit-level census of all lattice states.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{Classifier, Evidence, Justification, Label};
use crate::error::{Error, Result};
use crate::lattice::LatticeSubset;

/// One orbit of nonempty subsets.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub canonical: LatticeSubset,
    #[serde(rename = "N")]
    pub n: u32,
    pub orbit_size: usize,
    pub kappa: u8,
    pub label: Label,
    pub justification: Justification,
    pub evidence: Evidence,
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Census {
    pub records: Vec<CensusRecord>,
}

/// Subset and orbit counts per `(N, label)`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Summary {
    pub subsets: BTreeMap<(u32, Label), usize>,
    pub orbits: BTreeMap<(u32, Label), usize>,
}

impl Summary {
    pub fn subsets_with(&self, n: u32, label: Label) -> usize {
        self.subsets.get(&(n, label)).copied().unwrap_or(0)
    }

    pub fn orbits_with(&self, n: u32, label: Label) -> usize {
        self.orbits.get(&(n, label)).copied().unwrap_or(0)
    }

    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let labels = Label::ALL.map(Label::as_str);
        let orbit_cols: Vec<String> = labels.iter().map(|l| format!("{l}_orbits")).collect();
        writeln!(w, "N,{},{}", labels.join(","), orbit_cols.join(","))?;
        for n in 1..=16 {
            let subs: Vec<String> = Label::ALL
                .iter()
                .map(|&l| self.subsets_with(n, l).to_string())
                .collect();
            let orbs: Vec<String> = Label::ALL
                .iter()
                .map(|&l| self.orbits_with(n, l).to_string())
                .collect();
            writeln!(w, "{n},{},{}", subs.join(","), orbs.join(","))?;
        }
        Ok(())
    }
}

impl Census {
    /// Classifies every orbit whose cardinality lies in `range`.
    ///
    /// States detected by the witness are also run through the LP; a
    /// certificate for any of them aborts with [`Error::Consistency`].
    pub fn run(classifier: &Classifier, range: RangeInclusive<u32>) -> Result<Self> {
        let reps: Vec<_> = classifier
            .group()
            .all_orbits()
            .into_iter()
            .filter(|o| !o.canonical.is_empty() && range.contains(&o.canonical.len()))
            .collect();
        let records = reps
            .par_iter()
            .map(|o| {
                let c = classifier.classify(o.canonical)?;
                if c.label == Label::PptEntangled {
                    if let Some(cert) = classifier.decompose(o.canonical)? {
                        return Err(Error::Consistency(format!(
                            "{} is witnessed entangled yet certified separable: {cert}",
                            o.canonical
                        )));
                    }
                }
                Ok(CensusRecord {
                    canonical: o.canonical,
                    n: c.n,
                    orbit_size: o.orbit_size,
                    kappa: c.kappa,
                    label: c.label,
                    justification: c.justification,
                    evidence: c.evidence,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { records })
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for r in &self.records {
            *s.subsets.entry((r.n, r.label)).or_default() += r.orbit_size;
            *s.orbits.entry((r.n, r.label)).or_default() += 1;
        }
        s
    }

    pub fn total_subsets(&self) -> usize {
        self.records.iter().map(|r| r.orbit_size).sum()
    }

    pub fn with_label(&self, label: Label) -> impl Iterator<Item = &CensusRecord> {
        self.records.iter().filter(move |r| r.label == label)
    }

    pub fn write_jsonl<W: Write>(&self, mut w: W) -> Result<()> {
        for r in &self.records {
            serde_json::to_writer(&mut w, r)?;
            w.write_all(b"\n")?;
        }
        Ok(())
    }

    pub fn read_jsonl<R: BufRead>(r: R) -> Result<Self> {
        let mut records = Vec::new();
        for line in r.lines() {
            let line = line?;
            if !line.trim().is_empty() {
                records.push(serde_json::from_str(&line)?);
            }
        }
        Ok(Self { records })
    }
}
