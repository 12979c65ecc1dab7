//! Checks computed mu-values against the known relations between them.
//!
//! Every check is evaluated from exact data only; truncated searches,
//! inapplicable hypotheses (minimum degree below two, non-regular input)
//! and missing data all produce `Skipped` with a reason, never `Pass`.

use std::fmt;

use serde::Serialize;

use crate::coloring::{class_one_coloring, EdgeColoring};
use crate::error::{Error, Result};
use crate::families::{expected_mu_cycle, Family, FamilySpec};
use crate::graph::{validate, Graph};
use crate::solver::{find_interval_coloring, mu_all, rainbow_bound, MuResult, MuSummary, MuTable, SolverConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckId {
    /// Cycle aggregates equal their closed forms.
    CycleValues,
    /// Strict order between mu21 and mu12 on cycles.
    CycleOrder,
    MuChains,
    ClassOneMu12,
    RainbowBound,
    Mu21RainbowBound,
    Mu21BelowN,
    ClassOneMu21BelowMu12,
    ClassOneEquivalence,
    BoundBelowN,
    BothOrdersRealized,
}

impl CheckId {
    /// The relation being checked.
    pub fn claim(self) -> &'static str {
        match self {
            CheckId::CycleValues => {
                "C_2k: mu11 = (1 if k=2 else 0), mu12 = mu22 = 2k, mu21 = 2k-1; \
                 C_2k+1: mu11 = (2 if k=1 else 0), mu12 = 2, mu21 = mu22 = 2k"
            }
            CheckId::CycleOrder => "mu21(C_2k) < mu12(C_2k) for k>=2; mu12(C_2k+1) < mu21(C_2k+1) for k>=2",
            CheckId::MuChains => "mu11 <= mu12 <= mu22 and mu11 <= mu21 <= mu22",
            CheckId::ClassOneMu12 => "regular with chi' = max degree implies mu12 = |V|",
            CheckId::RainbowBound => "r-regular: mu2(G, |E|) <= floor((r|V| - 2) / (2(r - 1)))",
            CheckId::Mu21RainbowBound => "r-regular: mu21 <= floor((r|V| - 2) / (2(r - 1)))",
            CheckId::Mu21BelowN => "regular: mu21 <= |V| - 1",
            CheckId::ClassOneMu21BelowMu12 => "regular with chi' = max degree implies mu21 < mu12",
            CheckId::ClassOneEquivalence => {
                "regular: chi' = max degree <=> interval colorable <=> mu22 = |V| <=> mu12 = |V|"
            }
            CheckId::BoundBelowN => "floor((r n - 2) / (2(r - 1))) <= n - 1",
            CheckId::BothOrdersRealized => "corpus has graphs with mu21 < mu12 and with mu12 < mu21",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: CheckId,
    pub subject: String,
    pub status: CheckStatus,
    pub claim: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub computed: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Extra figures that do not affect the status.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub info: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<EdgeColoring>,
}

impl Check {
    fn new(id: CheckId, subject: &str, status: CheckStatus) -> Self {
        Check {
            id,
            subject: subject.to_string(),
            status,
            claim: id.claim(),
            expected: None,
            computed: None,
            reason: None,
            info: None,
            witness: None,
        }
    }

    fn judged(id: CheckId, subject: &str, holds: bool, expected: String, computed: String) -> Self {
        let status = if holds { CheckStatus::Pass } else { CheckStatus::Fail };
        Check {
            expected: Some(expected),
            computed: Some(computed),
            ..Check::new(id, subject, status)
        }
    }

    pub fn skipped(id: CheckId, subject: &str, reason: impl Into<String>) -> Self {
        Check {
            reason: Some(reason.into()),
            ..Check::new(id, subject, CheckStatus::Skipped)
        }
    }

    fn with_info(mut self, info: String) -> Self {
        self.info = Some(info);
        self
    }

    fn with_witness(mut self, witness: Option<EdgeColoring>) -> Self {
        if self.status == CheckStatus::Fail {
            self.witness = witness;
        }
        self
    }
}

/// Both inequality chains on one summary.
pub fn check_mu_chains(subject: &str, s: &MuSummary) -> Check {
    let pairs = [
        ("mu11 <= mu12", s.mu11 <= s.mu12),
        ("mu12 <= mu22", s.mu12 <= s.mu22),
        ("mu11 <= mu21", s.mu11 <= s.mu21),
        ("mu21 <= mu22", s.mu21 <= s.mu22),
    ];
    let violated: Vec<_> = pairs.iter().filter(|(_, ok)| !ok).map(|(name, _)| *name).collect();
    let computed = format!(
        "mu11={} mu12={} mu21={} mu22={}",
        s.mu11, s.mu12, s.mu21, s.mu22
    );
    let mut check = Check::judged(CheckId::MuChains, subject, violated.is_empty(), CheckId::MuChains.claim().into(), computed);
    if !violated.is_empty() {
        check.reason = Some(format!("violated: {}", violated.join(", ")));
    }
    check
}

/// A summary breaking `mu11 <= mu12`, for exercising the failure path.
pub fn corrupted_summary() -> MuSummary {
    MuSummary {
        mu11: 2,
        mu12: 1,
        mu21: 3,
        mu22: 4,
        attaining_t: crate::solver::AttainingT {
            mu11: 0,
            mu12: 0,
            mu21: 0,
            mu22: 0,
        },
    }
}

/// Cycle closed forms and the strict order between mu21 and mu12.
pub fn check_cycle(subject: &str, n: usize, s: &MuSummary) -> Result<Vec<Check>> {
    let e = expected_mu_cycle(n)?;
    let expected = (e.mu11.unwrap(), e.mu12.unwrap(), e.mu21.unwrap(), e.mu22.unwrap());
    let values = Check::judged(
        CheckId::CycleValues,
        subject,
        s.values() == expected,
        format!("{expected:?}"),
        format!("{:?}", s.values()),
    );
    let order = if n % 2 == 0 {
        Check::judged(
            CheckId::CycleOrder,
            subject,
            s.mu21 < s.mu12,
            "mu21 < mu12".into(),
            format!("mu21={} mu12={}", s.mu21, s.mu12),
        )
    } else if n >= 5 {
        Check::judged(
            CheckId::CycleOrder,
            subject,
            s.mu12 < s.mu21,
            "mu12 < mu21".into(),
            format!("mu12={} mu21={}", s.mu12, s.mu21),
        )
    } else {
        Check::skipped(CheckId::CycleOrder, subject, "no strict order claimed for C_3")
    };
    Ok(vec![values, order])
}

/// Rainbow-coloring bound, `mu21` bounds and, for class-one graphs,
/// `mu21 < mu12`. The graph must be regular and the table must cover
/// `t = |E|`.
pub fn check_regular_bounds(
    g: &Graph,
    subject: &str,
    chi_prime: usize,
    table: &MuTable,
    summary: &MuSummary,
) -> Result<Vec<Check>> {
    let r = g
        .regular_degree()
        .ok_or_else(|| Error::argument(format!("{subject} is not regular")))?;
    let n = g.vertex_count();
    let m = g.edge_count() as u32;
    let mut out = Vec::new();

    let bound = rainbow_bound(r, n)?;
    out.push(
        Check::judged(
            CheckId::BoundBelowN,
            subject,
            bound <= n - 1,
            format!("<= {}", n - 1),
            format!("{bound} (r={r}, n={n})"),
        ),
    );

    out.push(match table.row(m).filter(|row| row.exact) {
        Some(row) => Check::judged(
            CheckId::RainbowBound,
            subject,
            row.mu2 <= bound,
            format!("<= {bound}"),
            format!("mu2(G, {m}) = {}", row.mu2),
        )
        .with_info(format!("gap = {}", bound as i64 - row.mu2 as i64))
        .with_witness(Some(row.witness_max.clone())),
        None => Check::skipped(CheckId::RainbowBound, subject, format!("no exact row for t = {m}")),
    });

    out.push(Check::judged(
        CheckId::Mu21RainbowBound,
        subject,
        summary.mu21 <= bound,
        format!("<= {bound}"),
        format!("mu21 = {}", summary.mu21),
    ));

    out.push(Check::judged(
        CheckId::Mu21BelowN,
        subject,
        summary.mu21 < n,
        format!("<= {}", n - 1),
        format!("mu21 = {}", summary.mu21),
    ));

    let class_one = chi_prime == r;
    out.push(if class_one {
        Check::judged(
            CheckId::ClassOneMu12,
            subject,
            summary.mu12 == n,
            format!("= {n}"),
            format!("mu12 = {}", summary.mu12),
        )
    } else {
        Check::skipped(CheckId::ClassOneMu12, subject, format!("chi' = {chi_prime} > {r} = max degree"))
    });
    out.push(if class_one {
        Check::judged(
            CheckId::ClassOneMu21BelowMu12,
            subject,
            summary.mu21 < summary.mu12,
            "mu21 < mu12".into(),
            format!("mu21={} mu12={}", summary.mu21, summary.mu12),
        )
    } else {
        Check::skipped(
            CheckId::ClassOneMu21BelowMu12,
            subject,
            format!("chi' = {chi_prime} > {r} = max degree"),
        )
    });
    Ok(out)
}

/// Evaluates the four statements separately: a max-degree coloring exists
/// (backtracking), an interval coloring exists (search over all `t`),
/// `mu22 = |V|`, `mu12 = |V|`; passes iff they agree.
pub fn check_equivalence(g: &Graph, subject: &str, summary: &MuSummary, config: &SolverConfig) -> Check {
    let id = CheckId::ClassOneEquivalence;
    if g.regular_degree().is_none() {
        return Check::skipped(id, subject, "graph is not regular");
    }
    let n = g.vertex_count();
    let class_one = match class_one_coloring(g, config.chromatic_budget) {
        Ok(c) => c.is_some(),
        Err(e) => return Check::skipped(id, subject, format!("max-degree coloring search: {e}")),
    };
    let Some(interval) = find_interval_coloring(g, &config.search).as_bool() else {
        return Check::skipped(id, subject, "interval coloring search exhausted its budget");
    };
    let legs = [class_one, interval, summary.mu22 == n, summary.mu12 == n];
    let agree = legs.iter().all(|&b| b == legs[0]);
    Check::judged(
        id,
        subject,
        agree,
        "all four equal".into(),
        format!(
            "class_one={} interval_colorable={} mu22_eq_n={} mu12_eq_n={}",
            legs[0], legs[1], legs[2], legs[3]
        ),
    )
}

/// One verified graph and its computed data.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SubjectResult {
    pub subject: String,
    pub n: usize,
    pub m: usize,
    pub regular_degree: Option<usize>,
    pub chi_prime: Option<usize>,
    pub summary: Option<MuSummary>,
    pub exact: bool,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub subjects: Vec<SubjectResult>,
    pub checks: Vec<Check>,
}

const GATED: [CheckId; 9] = [
    CheckId::BoundBelowN,
    CheckId::RainbowBound,
    CheckId::Mu21RainbowBound,
    CheckId::Mu21BelowN,
    CheckId::ClassOneMu12,
    CheckId::ClassOneMu21BelowMu12,
    CheckId::ClassOneEquivalence,
    CheckId::CycleValues,
    CheckId::CycleOrder,
];

impl VerificationReport {
    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    pub fn all_passed(&self) -> bool {
        self.count(CheckStatus::Fail) == 0
    }

    pub fn find(&self, id: CheckId, subject: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id && c.subject == subject)
    }

    /// Computes `g` and runs every applicable check. A cycle is recognised
    /// through `family`.
    pub fn verify_graph(&mut self, subject: &str, g: &Graph, family: Option<&FamilySpec>, config: &SolverConfig) {
        let result = mu_all(g, config);
        self.record(subject, g, family, result, config);
    }

    /// Like [`verify_graph`](Self::verify_graph) but with precomputed
    /// solver output.
    pub fn record(
        &mut self,
        subject: &str,
        g: &Graph,
        family: Option<&FamilySpec>,
        result: Result<MuResult>,
        config: &SolverConfig,
    ) {
        let report = validate(g);
        let (chi_prime, summary, exact, table) = match &result {
            Ok(r) => (Some(r.chi_prime), r.summary, r.table.is_exact(), Some(&r.table)),
            Err(_) => (None, None, false, None),
        };
        self.subjects.push(SubjectResult {
            subject: subject.to_string(),
            n: g.vertex_count(),
            m: g.edge_count(),
            regular_degree: report.regular_degree,
            chi_prime,
            summary,
            exact,
        });

        let (Some(summary), Some(table), Some(chi)) = (summary, table, chi_prime) else {
            let reason = match &result {
                Err(e) => format!("computation failed: {e}"),
                Ok(_) => "mu-table is not exact (node budget exhausted)".to_string(),
            };
            self.checks.push(Check::skipped(CheckId::MuChains, subject, reason.clone()));
            for id in GATED {
                self.checks.push(Check::skipped(id, subject, reason.clone()));
            }
            return;
        };

        self.checks.push(check_mu_chains(subject, &summary));
        if !report.meets_delta2 {
            for id in GATED {
                self.checks.push(Check::skipped(id, subject, "minimum degree below 2"));
            }
            return;
        }

        match family {
            Some(spec) if spec.family == Family::Cycle => {
                self.checks.extend(check_cycle(subject, spec.params[0], &summary).expect("cycle spec is valid"));
            }
            _ => {
                for id in [CheckId::CycleValues, CheckId::CycleOrder] {
                    self.checks.push(Check::skipped(id, subject, "not a cycle"));
                }
            }
        }

        if report.regular_degree.is_some() {
            let bounds = check_regular_bounds(g, subject, chi, table, &summary).expect("graph is regular");
            self.checks.extend(bounds);
            self.checks.push(check_equivalence(g, subject, &summary, config));
        } else {
            for id in &GATED[..7] {
                self.checks.push(Check::skipped(*id, subject, "graph is not regular"));
            }
        }
    }

    /// Adds a check on a deliberately corrupted summary; it must fail.
    pub fn inject_corrupt(&mut self) {
        self.checks.push(check_mu_chains("synthetic:corrupted", &corrupted_summary()));
    }

    /// Adds the corpus-level check that both strict orders between `mu21`
    /// and `mu12` occur.
    pub fn finish(&mut self) {
        let exact: Vec<_> = self
            .subjects
            .iter()
            .filter_map(|s| s.summary.map(|sum| (s.subject.as_str(), sum)))
            .collect();
        let below = exact.iter().find(|(_, s)| s.mu21 < s.mu12);
        let above = exact.iter().find(|(_, s)| s.mu12 < s.mu21);
        let check = match (below, above) {
            (Some((a, _)), Some((b, _))) => Check::judged(
                CheckId::BothOrdersRealized,
                "corpus",
                true,
                "both orders present".into(),
                format!("mu21 < mu12 in {a}; mu12 < mu21 in {b}"),
            ),
            _ => Check::skipped(
                CheckId::BothOrdersRealized,
                "corpus",
                "corpus does not contain both orders",
            ),
        };
        self.checks.push(check);
    }
}

/// Verifies every family member named by `range` (e.g. `cycle:3..8`).
pub fn verify_family(range: &str, config: &SolverConfig) -> Result<VerificationReport> {
    let specs = FamilySpec::parse_range(range)?;
    let mut report = VerificationReport::default();
    for spec in &specs {
        report.verify_graph(&spec.to_string(), &spec.generate(), Some(spec), config);
    }
    report.finish();
    Ok(report)
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.checks.iter().map(|c| c.subject.len()).max().unwrap_or(7).max(7);
        writeln!(f, "{:<width$}  {:<26}  {:<7}  details", "subject", "check", "status")?;
        for c in &self.checks {
            let status = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skipped",
            };
            let id = serde_plain_name(c.id);
            let details = match (&c.computed, &c.reason) {
                (Some(computed), Some(reason)) => format!("{computed} ({reason})"),
                (Some(computed), None) => computed.clone(),
                (None, Some(reason)) => reason.clone(),
                (None, None) => String::new(),
            };
            writeln!(f, "{:<width$}  {:<26}  {:<7}  {details}", c.subject, id, status)?;
        }
        write!(
            f,
            "{} passed, {} failed, {} skipped",
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Skipped)
        )
    }
}

fn serde_plain_name(id: CheckId) -> &'static str {
    match id {
        CheckId::CycleValues => "cycle_values",
        CheckId::CycleOrder => "cycle_order",
        CheckId::MuChains => "mu_chains",
        CheckId::ClassOneMu12 => "class_one_mu12",
        CheckId::RainbowBound => "rainbow_bound",
        CheckId::Mu21RainbowBound => "mu21_rainbow_bound",
        CheckId::Mu21BelowN => "mu21_below_n",
        CheckId::ClassOneMu21BelowMu12 => "class_one_mu21_below_mu12",
        CheckId::ClassOneEquivalence => "class_one_equivalence",
        CheckId::BoundBelowN => "bound_below_n",
        CheckId::BothOrdersRealized => "both_orders_realized",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::solver::AttainingT;

    fn summary(values: (usize, usize, usize, usize)) -> MuSummary {
        MuSummary {
            mu11: values.0,
            mu12: values.1,
            mu21: values.2,
            mu22: values.3,
            attaining_t: AttainingT {
                mu11: 0,
                mu12: 0,
                mu21: 0,
                mu22: 0,
            },
        }
    }

    fn graph(s: &str) -> Graph {
        s.parse::<FamilySpec>().unwrap().generate()
    }

    #[test]
    fn chains() {
        assert_eq!(check_mu_chains("c4", &summary((1, 4, 3, 4))).status, CheckStatus::Pass);
        assert_eq!(check_mu_chains("c5", &summary((0, 2, 4, 4))).status, CheckStatus::Pass);
        let bad = check_mu_chains("bad", &corrupted_summary());
        assert_eq!(bad.status, CheckStatus::Fail);
        assert!(bad.expected.is_some() && bad.computed.is_some());
        assert_eq!(bad.reason.as_deref(), Some("violated: mu11 <= mu12"));
    }

    #[test]
    fn regular_bounds() {
        let config = SolverConfig::default();
        let c6 = graph("cycle:6");
        let res = mu_all(&c6, &config).unwrap();
        let checks = check_regular_bounds(&c6, "cycle:6", res.chi_prime, &res.table, &res.summary.unwrap()).unwrap();
        let rainbow = checks.iter().find(|c| c.id == CheckId::RainbowBound).unwrap();
        assert_eq!(rainbow.status, CheckStatus::Pass);
        assert_eq!(rainbow.info.as_deref(), Some("gap = 0"));

        let c5 = graph("cycle:5");
        let res = mu_all(&c5, &config).unwrap();
        let checks = check_regular_bounds(&c5, "cycle:5", res.chi_prime, &res.table, &res.summary.unwrap()).unwrap();
        let cor = checks.iter().find(|c| c.id == CheckId::ClassOneMu21BelowMu12).unwrap();
        assert_eq!(cor.status, CheckStatus::Skipped);
        assert!(checks.iter().all(|c| c.status != CheckStatus::Fail));

        let k4 = graph("complete:4");
        let res = mu_all(&k4, &config).unwrap();
        let checks = check_regular_bounds(&k4, "complete:4", res.chi_prime, &res.table, &res.summary.unwrap()).unwrap();
        let mu21 = checks.iter().find(|c| c.id == CheckId::Mu21RainbowBound).unwrap();
        assert_eq!(mu21.expected.as_deref(), Some("<= 2"));
        assert_eq!(mu21.status, CheckStatus::Pass);

        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        let res = mu_all(&star, &config).unwrap();
        assert!(check_regular_bounds(&star, "star", res.chi_prime, &res.table, &res.summary.unwrap()).is_err());
    }

    #[test]
    fn equivalence_on_small_regular_graphs() {
        let config = SolverConfig::default();
        for s in ["cycle:4", "cycle:5", "complete_bipartite:3,3"] {
            let g = graph(s);
            let res = mu_all(&g, &config).unwrap();
            let c = check_equivalence(&g, s, &res.summary.unwrap(), &config);
            assert_eq!(c.status, CheckStatus::Pass, "{s}: {:?}", c.computed);
        }
        // a wrong summary makes the legs disagree
        let c4 = graph("cycle:4");
        let c = check_equivalence(&c4, "cycle:4", &summary((1, 3, 3, 4)), &config);
        assert_eq!(c.status, CheckStatus::Fail);
    }

    #[test]
    fn cycle_family_report() {
        let report = verify_family("cycle:3..6", &SolverConfig::default()).unwrap();
        assert!(report.all_passed(), "{report}");
        for n in 3..=6 {
            let c = report.find(CheckId::CycleValues, &format!("cycle:{n}")).unwrap();
            assert_eq!(c.status, CheckStatus::Pass);
        }
        assert_eq!(report.find(CheckId::CycleOrder, "cycle:3").unwrap().status, CheckStatus::Skipped);
        assert_eq!(report.find(CheckId::BothOrdersRealized, "corpus").unwrap().status, CheckStatus::Pass);
    }

    #[test]
    fn budget_truncation_skips_everything() {
        let mut report = VerificationReport::default();
        let g = graph("complete_bipartite:3,3");
        report.verify_graph("k33", &g, None, &SolverConfig::default().with_node_budget(1_000));
        assert!(report.checks.iter().all(|c| c.status == CheckStatus::Skipped));
        assert!(!report.subjects[0].exact);
    }

    #[test]
    fn low_degree_graphs_only_get_chains() {
        let mut report = VerificationReport::default();
        let star = Graph::new(4, vec![(0, 1), (0, 2), (0, 3)]).unwrap();
        report.verify_graph("star", &star, None, &SolverConfig::default());
        assert_eq!(report.find(CheckId::MuChains, "star").unwrap().status, CheckStatus::Pass);
        assert_eq!(report.count(CheckStatus::Pass), 1);
        assert_eq!(report.count(CheckStatus::Fail), 0);
    }

    #[test]
    fn injected_corruption_fails() {
        let mut report = VerificationReport::default();
        report.inject_corrupt();
        assert!(!report.all_passed());
        assert!(report.to_string().contains("FAIL"));
    }
}
