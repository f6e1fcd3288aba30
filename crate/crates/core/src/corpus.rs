//! Named algebras with known answers, and the regression run over them.

use rayon::prelude::*;
use serde::Serialize;

use crate::cert::{verdict_certificate, verify_certificate};
use crate::definability::{definability_oracle, supersolvable_test, tbc_find, Outcome, Supersolvable, TbcOutcome};
use crate::lie::named;
use crate::lie::{AlgebraData, GroupPresentation, PresentationKind};
use crate::linalg::scalar::{rat, Rat};
use crate::linalg::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Stated in the literature for this group.
    Literature,
    /// Worked out by hand from classical facts.
    Derived,
    /// Immediate from the definitions.
    Trivial,
}

impl Provenance {
    pub fn tag(self) -> &'static str {
        match self {
            Provenance::Literature => "literature",
            Provenance::Derived => "derived",
            Provenance::Trivial => "trivial",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Known<T> {
    pub value: T,
    pub provenance: Provenance,
}

fn known<T>(value: T, provenance: Provenance) -> Known<T> {
    Known { value, provenance }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefinabilityCase {
    pub kind: PresentationKind,
    pub finite_center_levi: Option<bool>,
    pub expected: Known<Outcome>,
}

impl DefinabilityCase {
    pub fn label(&self) -> String {
        let kind = match self.kind {
            PresentationKind::SimplyConnected => "simply-connected",
            PresentationKind::LinearMatrix => "linear",
            PresentationKind::AbstractConnected => "abstract",
        };
        match self.finite_center_levi {
            Some(true) => format!("{kind}+finite-center-levi"),
            _ => kind.to_string(),
        }
    }

    pub fn presentation(&self, d: &AlgebraData) -> GroupPresentation {
        let mut p = GroupPresentation::new(self.kind, d.algebra.clone());
        if let Some(m) = &d.matrices {
            p = p.with_matrices(m.clone());
        }
        if let Some(f) = self.finite_center_levi {
            p = p.with_finite_center_levi(f);
        }
        p
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KnownProperties {
    pub solvable: Known<bool>,
    pub nilpotent: Known<bool>,
    /// Only recorded for solvable algebras.
    pub supersolvable: Option<Known<bool>>,
    pub tbc: Option<Known<bool>>,
    pub definability: Vec<DefinabilityCase>,
    /// Some ideals of the algebra, for containment checks against the radical.
    pub ideals: Vec<Subspace>,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub name: String,
    pub data: AlgebraData,
    pub known: KnownProperties,
}

use Outcome::{Definable as Def, NotDefinable as NotDef, Unknown};
use PresentationKind::{AbstractConnected as Abs, LinearMatrix as Lin, SimplyConnected as Sc};
use Provenance::{Derived, Literature, Trivial};

fn case(kind: PresentationKind, flc: Option<bool>, o: Outcome, p: Provenance) -> DefinabilityCase {
    DefinabilityCase { kind, finite_center_levi: flc, expected: known(o, p) }
}

/// Entry for a solvable algebra: `(sc, abstract, linear)` outcomes.
fn solvable(
    name: &str,
    data: AlgebraData,
    nilpotent: bool,
    supersolvable: bool,
    tbc: bool,
    prov: Provenance,
    linear: Option<Known<Outcome>>,
) -> CorpusEntry {
    let sc = if supersolvable { Def } else { NotDef };
    let abs = if tbc { Def } else { NotDef };
    let mut definability = vec![case(Sc, None, sc, prov), case(Abs, None, abs, prov)];
    if let (Some(l), true) = (linear, data.matrices.is_some()) {
        definability.push(case(Lin, None, l.value, l.provenance));
    }
    CorpusEntry {
        name: name.into(),
        data,
        known: KnownProperties {
            solvable: known(true, Trivial),
            nilpotent: known(nilpotent, Trivial),
            supersolvable: Some(known(supersolvable, prov)),
            tbc: Some(known(tbc, prov)),
            definability,
            ideals: vec![],
        },
    }
}

/// Entry for a non-solvable algebra: `(sc, abstract)` outcomes under the
/// finite-center-Levi flag; without it the verdict is Unknown.
fn levi(
    name: &str,
    data: AlgebraData,
    sc: Outcome,
    abs: Outcome,
    prov: Provenance,
    ideals: Vec<Subspace>,
) -> CorpusEntry {
    let mut definability =
        vec![case(Sc, Some(true), sc, prov), case(Abs, Some(true), abs, prov), case(Abs, None, Unknown, Trivial)];
    if data.matrices.is_some() {
        definability.push(case(Lin, None, Def, Literature));
    }
    CorpusEntry {
        name: name.into(),
        data,
        known: KnownProperties {
            solvable: known(false, Trivial),
            nilpotent: known(false, Trivial),
            supersolvable: None,
            tbc: None,
            definability,
            ideals,
        },
    }
}

fn span(n: usize, vs: &[&[i64]]) -> Subspace {
    Subspace::span(n, vs.iter().map(|v| v.iter().map(|&x| rat(x)).collect::<Vec<Rat>>()).collect())
}

/// All entries, sorted by name.
pub fn corpus() -> Vec<CorpusEntry> {
    let def = |p| Some(known(Def, p));
    let mut out = vec![
        solvable("abelian-1", named::abelian(1), true, true, true, Trivial, None),
        solvable("abelian-2", named::abelian(2), true, true, true, Trivial, None),
        solvable("abelian-3", named::abelian(3), true, true, true, Trivial, None),
        solvable("ax-plus-b", named::ax_plus_b(), false, true, true, Derived, def(Derived)),
        solvable("heisenberg", named::heisenberg(), true, true, true, Derived, def(Derived)),
        solvable("e2", named::e2(), false, false, true, Derived, def(Derived)),
        solvable("oscillator", named::oscillator(), false, false, false, Derived, Some(known(NotDef, Derived))),
        solvable("intro-example", named::intro_example(), true, true, true, Trivial, def(Literature)),
        levi("sl2", named::sl2(), Def, Def, Literature, vec![]),
        levi("so3", named::so3(), Def, Def, Literature, vec![]),
        levi("gl2", named::gl2(), Def, Def, Derived, vec![span(4, &[&[1, 0, 0, 1]])]),
        levi(
            "sl2-ltimes-r2",
            named::sl2_ltimes_r2(),
            Def,
            Def,
            Derived,
            vec![span(5, &[&[0, 0, 0, 1, 0], &[0, 0, 0, 0, 1]])],
        ),
        levi(
            "so3-plus-e2",
            named::so3_plus_e2(),
            NotDef,
            Def,
            Derived,
            vec![
                span(6, &[&[0, 0, 0, 1, 0, 0], &[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]]),
                span(6, &[&[0, 0, 0, 0, 1, 0], &[0, 0, 0, 0, 0, 1]]),
            ],
        ),
        levi("sl2-plus-r", named::sl2_plus_r(), Def, Def, Derived, vec![span(4, &[&[0, 0, 0, 1]])]),
    ];
    for kind in named::BIANCHI_KINDS {
        let data = named::bianchi(kind).expect("listed kind");
        let (nil, ss, tbc) = match kind {
            "I" | "II" => (true, true, true),
            "VII0" => (false, false, true),
            "VIIh" => (false, false, false),
            _ => (false, true, true),
        };
        let lin = if tbc { Def } else { NotDef };
        out.push(solvable(&format!("bianchi-{kind}"), data, nil, ss, tbc, Derived, Some(known(lin, Derived))));
    }
    out.sort_by(|a, b| a.name.cmp(&b.name));
    out
}

pub fn entry(name: &str) -> Option<CorpusEntry> {
    corpus().into_iter().find(|e| e.name == name)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub property: String,
    pub expected: String,
    pub observed: String,
    pub provenance: Provenance,
}

impl Check {
    pub fn ok(&self) -> bool {
        self.expected == self.observed
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryReport {
    pub name: String,
    pub checks: Vec<Check>,
}

impl EntryReport {
    pub fn ok(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }
}

fn check(
    property: impl Into<String>,
    expected: impl ToString,
    observed: impl ToString,
    provenance: Provenance,
) -> Check {
    Check { property: property.into(), expected: expected.to_string(), observed: observed.to_string(), provenance }
}

fn show<T: ToString, E: ToString>(r: Result<T, E>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {}", e.to_string()),
    }
}

/// Reproduces every known property of `e` and checks that each emitted
/// verdict certificate verifies.
pub fn run_entry(e: &CorpusEntry) -> EntryReport {
    let g = &e.data.algebra;
    let k = &e.known;
    let mut checks = vec![
        check("solvable", k.solvable.value, show(g.is_solvable()), k.solvable.provenance),
        check("nilpotent", k.nilpotent.value, g.is_nilpotent(), k.nilpotent.provenance),
    ];
    if let Some(s) = &k.supersolvable {
        let observed = match supersolvable_test(g) {
            Ok(Supersolvable::Yes(_)) => "true".to_string(),
            Ok(Supersolvable::No(_)) => "false".to_string(),
            Ok(Supersolvable::Indeterminate { reason, .. }) => format!("indeterminate: {reason}"),
            Err(err) => format!("error: {err}"),
        };
        checks.push(check("supersolvable", s.value, observed, s.provenance));
    }
    if let Some(t) = &k.tbc {
        let observed = match tbc_find(g) {
            Ok(TbcOutcome::Certificate(_)) => "true".to_string(),
            Ok(TbcOutcome::NotTbc(_)) => "false".to_string(),
            Ok(TbcOutcome::Unknown(r)) => format!("unknown: {r}"),
            Err(err) => format!("error: {err}"),
        };
        checks.push(check("tbc", t.value, observed, t.provenance));
    }
    if !k.ideals.is_empty() {
        let contained = crate::structure::radical(g).map(|r| {
            k.ideals.iter().filter(|i| crate::structure::is_solvable_subalgebra(g, i)).all(|i| r.contains_space(i))
        });
        checks.push(check("radical-contains-solvable-ideals", true, show(contained), Derived));
    }
    let subject = e.data.to_json();
    for c in &k.definability {
        let p = c.presentation(&e.data);
        let observed = match definability_oracle(&p) {
            Ok(v) => {
                let cert = verdict_certificate(&e.data, &p, &v);
                match verify_certificate(&subject, &cert) {
                    Ok(_) => v.outcome.name().to_string(),
                    Err(err) => format!("{} (certificate rejected: {err})", v.outcome.name()),
                }
            }
            Err(err) => format!("error: {err}"),
        };
        checks.push(check(format!("oracle[{}]", c.label()), c.expected.value.name(), observed, c.expected.provenance));
    }
    EntryReport { name: e.name.clone(), checks }
}

/// Runs every entry in parallel; reports come back ordered by name.
pub fn run_all(entries: &[CorpusEntry]) -> Vec<EntryReport> {
    let mut reports: Vec<EntryReport> = entries.par_iter().map(run_entry).collect();
    reports.sort_by(|a, b| a.name.cmp(&b.name));
    reports
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lie::parse_algebra;

    #[test]
    fn names_are_unique_and_sorted() {
        let c = corpus();
        assert!(c.windows(2).all(|w| w[0].name < w[1].name));
        for n in ["intro-example", "e2", "bianchi-VII0", "oscillator", "so3-plus-e2", "abelian-3"] {
            assert!(entry(n).is_some(), "{n}");
        }
    }

    #[test]
    fn required_entries_carry_their_answers() {
        let intro = entry("intro-example").unwrap();
        let m = &intro.data.matrices.as_ref().unwrap().mats[0];
        assert_eq!(*m, named::mat(&[&[1, 0, 0], &[0, 0, -1], &[0, 1, 0]]));
        assert!(!entry("bianchi-VII0").unwrap().known.supersolvable.unwrap().value);
        assert!(entry("e2").unwrap().known.tbc.unwrap().value);
    }

    #[test]
    fn every_entry_round_trips() {
        for e in corpus() {
            let back = parse_algebra(&e.data.to_json()).unwrap();
            assert_eq!(back.algebra, e.data.algebra, "{}", e.name);
            assert_eq!(back.matrices, e.data.matrices, "{}", e.name);
        }
    }

    #[test]
    fn known_answers_are_reproduced() {
        for r in run_all(&corpus()) {
            for c in &r.checks {
                assert!(c.ok(), "{}: {} expected {} observed {}", r.name, c.property, c.expected, c.observed);
            }
        }
    }
}
