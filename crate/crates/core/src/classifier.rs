//! The decision pipeline for a single lattice state.

use std::fmt::{self, Write as _};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::{is_ppt, k_matrix, kappa, prop1b_entangled, LatticeSubset};
use crate::linalg::{check_npt_margin, pt_spectrum};
use crate::notation::render_table;
use crate::pauli::PauliPair;
use crate::separability::{decompose, decompose_direct, DecompositionCertificate, SeparableBasis};
use crate::symmetry::SymmetryGroup;
use crate::tolerance::NPT_DECISION;
use crate::witness::{witness_scan, WitnessReport, WitnessScan};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Label {
    NptEntangled,
    PptEntangled,
    Separable,
    Unknown,
}

impl Label {
    pub const ALL: [Label; 4] = [
        Label::NptEntangled,
        Label::PptEntangled,
        Label::Separable,
        Label::Unknown,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Label::NptEntangled => "NPT_ENTANGLED",
            Label::PptEntangled => "PPT_ENTANGLED",
            Label::Separable => "SEPARABLE",
            Label::Unknown => "UNKNOWN",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Justification {
    /// A cross carries more than `N/2` points.
    Prop1aViolation,
    /// Some site outside `I` sees a single point on its cross.
    Prop1bSite,
    /// A `k_μν = 1` witness whose center lies in `I`.
    Prop3Witness,
    LpCertificate,
    MaximallyMixed,
    IsotropicN15,
    None,
}

impl Justification {
    pub fn as_str(self) -> &'static str {
        match self {
            Justification::Prop1aViolation => "PROP1A_VIOLATION",
            Justification::Prop1bSite => "PROP1B_SITE",
            Justification::Prop3Witness => "PROP3_WITNESS",
            Justification::LpCertificate => "LP_CERTIFICATE",
            Justification::MaximallyMixed => "MAXIMALLY_MIXED",
            Justification::IsotropicN15 => "ISOTROPIC_N15",
            Justification::None => "NONE",
        }
    }

    /// Labels this justification may support.
    pub fn supports(self, label: Label) -> bool {
        matches!(
            (self, label),
            (Justification::Prop1aViolation, Label::NptEntangled)
                | (
                    Justification::Prop1bSite | Justification::Prop3Witness,
                    Label::PptEntangled
                )
                | (
                    Justification::LpCertificate
                        | Justification::MaximallyMixed
                        | Justification::IsotropicN15,
                    Label::Separable
                )
                | (Justification::None, Label::Unknown)
        )
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Evidence {
    /// A site whose cross holds more than `N/2` points.
    ViolatingSite {
        site: PauliPair,
        cross_count: u32,
    },
    Witness {
        report: WitnessReport,
        prop1b_site: Option<PauliPair>,
    },
    Certificate(DecompositionCertificate),
    /// Rule-based verdicts need no further data.
    Rule,
    /// Sites where the witness was indecisive, for unknown states.
    Undecided {
        kappa_zero_sites: Vec<PauliPair>,
    },
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub subset: LatticeSubset,
    pub n: u32,
    pub kappa: u8,
    pub label: Label,
    pub justification: Justification,
    pub evidence: Evidence,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ClassifierOptions {
    /// Re-check every PPT/NPT verdict against the dense partial-transpose spectrum.
    pub numeric_double_check: bool,
    /// Solve the LP on the orbit representative.
    pub canonicalize_lp: bool,
    /// Decision margin for the dense double check.
    pub tolerance: f64,
}

impl Default for ClassifierOptions {
    fn default() -> Self {
        Self {
            numeric_double_check: false,
            canonicalize_lp: true,
            tolerance: NPT_DECISION,
        }
    }
}

pub struct Classifier {
    basis: SeparableBasis,
    group: &'static SymmetryGroup,
    pub options: ClassifierOptions,
}

impl Default for Classifier {
    fn default() -> Self {
        Self::new(ClassifierOptions::default())
    }
}

impl Classifier {
    pub fn new(options: ClassifierOptions) -> Self {
        Self {
            basis: SeparableBasis::build(),
            group: SymmetryGroup::shared(),
            options,
        }
    }

    pub fn basis(&self) -> &SeparableBasis {
        &self.basis
    }

    pub fn group(&self) -> &'static SymmetryGroup {
        self.group
    }

    pub fn decompose(&self, subset: LatticeSubset) -> Result<Option<DecompositionCertificate>> {
        if self.options.canonicalize_lp {
            decompose(&self.basis, self.group, subset)
        } else {
            decompose_direct(&self.basis, subset)
        }
    }

    pub fn classify(&self, subset: LatticeSubset) -> Result<Classification> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let ppt = is_ppt(subset)?;
        if self.options.numeric_double_check {
            self.double_check(subset, ppt)?;
        }
        let out = |label, justification, evidence| Classification {
            subset,
            n: subset.len(),
            kappa: kappa(subset),
            label,
            justification,
            evidence,
        };

        if subset.len() == 16 {
            return Ok(out(
                Label::Separable,
                Justification::MaximallyMixed,
                Evidence::Rule,
            ));
        }
        if !ppt {
            let (site, cross_count) = PauliPair::all()
                .map(|s| (s, subset.cross_count(s)))
                .find(|&(_, c)| 2 * c > subset.len())
                .expect("an NPT subset has a violating cross");
            return Ok(out(
                Label::NptEntangled,
                Justification::Prop1aViolation,
                Evidence::ViolatingSite { site, cross_count },
            ));
        }
        if subset.len() == 15 {
            return Ok(out(
                Label::Separable,
                Justification::IsotropicN15,
                Evidence::Rule,
            ));
        }

        let scan = witness_scan(subset)?;
        if let Some(report) = first_detection(&scan) {
            let prop1b_site = prop1b_entangled(subset)?;
            let justification = if prop1b_site.is_some() {
                Justification::Prop1bSite
            } else {
                Justification::Prop3Witness
            };
            return Ok(out(
                Label::PptEntangled,
                justification,
                Evidence::Witness {
                    report,
                    prop1b_site,
                },
            ));
        }
        if let Some(cert) = self.decompose(subset)? {
            return Ok(out(
                Label::Separable,
                Justification::LpCertificate,
                Evidence::Certificate(cert),
            ));
        }
        Ok(out(
            Label::Unknown,
            Justification::None,
            Evidence::Undecided {
                kappa_zero_sites: scan.kappa_zero_undecided,
            },
        ))
    }

    fn double_check(&self, subset: LatticeSubset, ppt: bool) -> Result<()> {
        let spectrum = pt_spectrum(subset)?;
        check_npt_margin(subset, &spectrum)?;
        let numeric_ppt = spectrum.min() >= -self.options.tolerance;
        if numeric_ppt != ppt {
            return Err(Error::OracleMismatch(format!(
                "{subset}: combinatorial PPT = {ppt}, dense minimum eigenvalue {:e}",
                spectrum.min()
            )));
        }
        Ok(())
    }

    /// Multi-line report: grid, k-matrix, decision trace and evidence.
    pub fn explain(&self, subset: LatticeSubset) -> Result<String> {
        let c = self.classify(subset)?;
        let k = k_matrix(subset);
        let mut s = String::new();
        writeln!(s, "subset {subset}  N = {}  kappa = {}", c.n, c.kappa).unwrap();
        s.push_str(&render_table(subset));
        s.push('\n');
        writeln!(s, "k-matrix (rows nu = 3..0, columns mu = 0..3):").unwrap();
        for nu in (0..4u8).rev() {
            let row: Vec<String> = (0..4u8)
                .map(|mu| k.get(PauliPair::new(mu, nu).expect("in range")).to_string())
                .collect();
            writeln!(s, "  {nu} | {}", row.join(" ")).unwrap();
        }
        writeln!(s, "verdict: {} ({})", c.label, c.justification).unwrap();
        match &c.evidence {
            Evidence::ViolatingSite { site, cross_count } => {
                writeln!(s, "cross through {site} holds {cross_count} points > N/2").unwrap();
            }
            Evidence::Witness {
                report,
                prop1b_site,
            } => {
                writeln!(
                    s,
                    "witness at (mu,nu) = {} with V = {}: value {:.6} (dense {:.6}), center {} {}",
                    report.site_mu_nu,
                    report.v,
                    report.value,
                    report.dense_value,
                    report.center,
                    if report.center_in_i {
                        "in I"
                    } else {
                        "not in I"
                    }
                )
                .unwrap();
                if let Some(p) = prop1b_site {
                    writeln!(s, "site {p} outside I sees a single point on its cross").unwrap();
                }
            }
            Evidence::Certificate(cert) => {
                writeln!(s, "certificate over {} rank-4 PPT states:", cert.len()).unwrap();
                for (m, w) in &cert.weights {
                    writeln!(s, "  {w} x {m}").unwrap();
                }
            }
            Evidence::Rule => {
                let why = match c.justification {
                    Justification::MaximallyMixed => "N = 16 is the maximally mixed state",
                    _ => "N = 15 is a separable isotropic state",
                };
                writeln!(s, "{why}").unwrap();
            }
            Evidence::Undecided { kappa_zero_sites } => {
                let pattern = if kappa_zero_sites.is_empty() {
                    "no k = 1 site"
                } else {
                    "kappa-zero/center-in-I pattern"
                };
                writeln!(s, "UNKNOWN: {pattern}, no LP certificate").unwrap();
            }
        }
        Ok(s)
    }
}

fn first_detection(scan: &WitnessScan) -> Option<WitnessReport> {
    scan.reports.iter().find(|r| r.value < 0.0).cloned()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::parse_subset;

    fn classify(s: &str) -> Classification {
        Classifier::default()
            .classify(parse_subset(s).unwrap())
            .unwrap()
    }

    #[test]
    fn rule_based_verdicts() {
        let c = Classifier::default();
        let full = c.classify(LatticeSubset::FULL).unwrap();
        assert_eq!(
            (full.label, full.justification),
            (Label::Separable, Justification::MaximallyMixed)
        );
        let n15 = c.classify(LatticeSubset(0x7FFF)).unwrap();
        assert_eq!(
            (n15.label, n15.justification),
            (Label::Separable, Justification::IsotropicN15)
        );
        assert!(matches!(
            c.classify(LatticeSubset::EMPTY),
            Err(Error::EmptySubset)
        ));
    }

    #[test]
    fn singleton_is_npt_with_a_violating_site() {
        let c = classify("0x0001");
        assert_eq!(c.label, Label::NptEntangled);
        let Evidence::ViolatingSite { site, cross_count } = c.evidence else {
            panic!("expected a violating site");
        };
        assert_eq!(cross_count, 1);
        assert!(site.col.value() == 0 || site.row.value() == 0);
    }

    #[test]
    fn example_grids() {
        let left = classify("..../XX.X/XX../XXX.");
        assert_eq!(
            (left.label, left.justification),
            (Label::PptEntangled, Justification::Prop1bSite)
        );
        let right = classify("XXX./XXXX/XXX./...X");
        assert_eq!(
            (right.label, right.justification),
            (Label::PptEntangled, Justification::Prop3Witness)
        );
        let rho6 = classify(".XX./.XX./.XX./....");
        assert_eq!(
            (rho6.label, rho6.justification),
            (Label::Separable, Justification::LpCertificate)
        );
    }

    #[test]
    fn justifications_match_labels() {
        let c = Classifier::new(ClassifierOptions {
            numeric_double_check: true,
            ..ClassifierOptions::default()
        });
        for mask in (1..=u16::MAX).step_by(97) {
            let r = c.classify(LatticeSubset(mask)).unwrap();
            assert!(r.justification.supports(r.label), "{r:?}");
        }
    }

    #[test]
    fn explain_mentions_the_evidence() {
        let c = Classifier::default();
        let rho6 = c
            .explain(parse_subset(".XX./.XX./.XX./....").unwrap())
            .unwrap();
        assert!(rho6.contains("LP_CERTIFICATE"));
        assert_eq!(rho6.matches("1/3 x").count(), 3);
        let single = c.explain(LatticeSubset(1)).unwrap();
        assert!(single.contains("PROP1A_VIOLATION"));
    }

    #[test]
    fn labels_serialize_in_screaming_case() {
        assert_eq!(
            serde_json::to_string(&Label::PptEntangled).unwrap(),
            "\"PPT_ENTANGLED\""
        );
        assert_eq!(
            serde_json::to_string(&Justification::IsotropicN15).unwrap(),
            "\"ISOTROPIC_N15\""
        );
    }
}
