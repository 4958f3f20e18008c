//! Finite regularity conditions on quandles and an empirical survey of the
//! implications between them.
//!
//! * `I′`: every symmetry `s_q` fixes exactly `q`.
//! * `D′`: every right translation `t_q: r ↦ r ▷ q` is surjective.
//! * `C`: the quandle is connected.
//! * `Φ′`: every orbit is realized as a coset quandle `(G/H, ▷_φ)` with
//!   `H ⊆ G^φ`. Finite groups have trivial identity components, so only this
//!   weak form of the φ-space condition is meaningful.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::par;
use crate::quandle::FiniteQuandle;
use crate::symmetry::{is_connected, orbits, Realizer};

/// `{r : q ▷ r = r}`.
pub fn fixed_points(quandle: &FiniteQuandle, q: usize) -> Result<Vec<usize>> {
    if q >= quandle.size() {
        return Err(Error::Index {
            index: q,
            size: quandle.size(),
        });
    }
    Ok((0..quandle.size()).filter(|&r| quandle.op(q, r) == r).collect())
}

fn column_image(quandle: &FiniteQuandle, q: usize) -> usize {
    let mut seen = vec![false; quandle.size()];
    for r in 0..quandle.size() {
        seen[quandle.op(r, q)] = true;
    }
    seen.iter().filter(|&&b| b).count()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Flags {
    pub i_prime: bool,
    pub d_prime: bool,
    pub c: bool,
    /// `None` when `Tr(Q)` is too large to enumerate.
    pub phi_prime: Option<bool>,
}

impl Flags {
    fn get(&self, name: &str) -> Option<bool> {
        match name {
            "I'" => Some(self.i_prime),
            "D'" => Some(self.d_prime),
            "C" => Some(self.c),
            "Phi'" => self.phi_prime,
            _ => None,
        }
    }
}

/// Realization data for one orbit, recorded at the orbit's least element.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitRealizationSummary {
    pub base: usize,
    pub orbit_size: usize,
    pub group_order: usize,
    pub stabilizer_order: usize,
    pub stabilizer_fixed_by_phi: bool,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RegularityReport {
    pub size: usize,
    pub flags: Flags,
    pub fixed_sets: Vec<Vec<usize>>,
    /// `|image t_q|` for every `q`.
    pub column_images: Vec<usize>,
    /// Least `q` whose symmetry fixes another point.
    pub non_isolated: Option<usize>,
    /// Least `q` whose right translation is not onto.
    pub non_surjective: Option<usize>,
    pub per_orbit_realizations: Vec<OrbitRealizationSummary>,
    /// Always `"weak"`: `H ⊆ G^φ` rather than `H` between `(G^φ)°` and `G^φ`.
    pub phi_notion: &'static str,
}

pub fn regularity_report(quandle: &FiniteQuandle, cap: usize, seed: u64) -> Result<RegularityReport> {
    let n = quandle.size();
    let fixed_sets = par::map_range(n, |q| (0..n).filter(|&r| quandle.op(q, r) == r).collect::<Vec<_>>());
    let column_images = par::map_range(n, |q| column_image(quandle, q));
    let non_isolated = fixed_sets.iter().position(|f| f.len() > 1);
    let non_surjective = column_images.iter().position(|&c| c < n);
    let connected = is_connected(quandle).connected;

    let (phi_prime, per_orbit_realizations) = match Realizer::new(quandle, cap) {
        Ok(z) => {
            let mut summaries = Vec::new();
            for base in orbits(quandle).bases {
                let r = z.realize(base, seed)?;
                summaries.push(OrbitRealizationSummary {
                    base,
                    orbit_size: r.orbit.len(),
                    group_order: r.group.order(),
                    stabilizer_order: r.stabilizer.len(),
                    stabilizer_fixed_by_phi: r.checks.stabilizer_fixed_by_phi,
                    verified: r.checks.all(),
                });
            }
            (Some(summaries.iter().all(|s| s.verified)), summaries)
        }
        Err(Error::CapExceeded { .. }) => (None, Vec::new()),
        Err(e) => return Err(e),
    };

    Ok(RegularityReport {
        size: n,
        flags: Flags {
            i_prime: non_isolated.is_none(),
            d_prime: non_surjective.is_none(),
            c: connected,
            phi_prime,
        },
        fixed_sets,
        column_images,
        non_isolated,
        non_surjective,
        per_orbit_realizations,
        phi_notion: "weak",
    })
}

/// Whether `I′` comes with surjective right translations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsequenceReport {
    pub i_prime: bool,
    pub connected: bool,
    /// Points `q` with `t_q` surjective.
    pub surjective_points: Vec<usize>,
    /// Largest `|image t_q|` and the points attaining it.
    pub max_image: usize,
    pub max_image_points: Vec<usize>,
    /// `I′` holds yet no right translation is onto.
    pub anomaly: bool,
}

pub fn isolated_connected_consequence(quandle: &FiniteQuandle) -> ConsequenceReport {
    let n = quandle.size();
    let i_prime = par::all_range(n, |q| (0..n).all(|r| r == q || quandle.op(q, r) != r));
    let images: Vec<usize> = (0..n).map(|q| column_image(quandle, q)).collect();
    let max_image = images.iter().copied().max().unwrap_or(0);
    let surjective_points: Vec<usize> = (0..n).filter(|&q| images[q] == n).collect();
    ConsequenceReport {
        i_prime,
        connected: is_connected(quandle).connected,
        anomaly: i_prime && surjective_points.is_empty(),
        surjective_points,
        max_image,
        max_image_points: (0..n).filter(|&q| images[q] == max_image).collect(),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurveyRow {
    pub name: String,
    pub size: usize,
    pub flags: Flags,
}

/// Observed status of `premise ⇒ conclusion` across the corpus.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Implication {
    pub premise: Vec<&'static str>,
    pub conclusion: &'static str,
    /// Instances where every premise holds (and all flags are known).
    pub premise_count: usize,
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Survey {
    pub rows: Vec<SurveyRow>,
    pub implications: Vec<Implication>,
}

const FLAG_NAMES: [&str; 4] = ["I'", "D'", "C", "Phi'"];

/// Flags for every instance, and every single-premise implication between
/// them plus `I′ ∧ C ⇒ D′`, with counterexamples.
pub fn implication_survey(corpus: &[(String, FiniteQuandle)], cap: usize, seed: u64) -> Result<Survey> {
    let reports = par::map_slice(corpus, |(_, q)| regularity_report(q, cap, seed));
    let mut rows = Vec::with_capacity(corpus.len());
    for ((name, q), rep) in corpus.iter().zip(reports) {
        rows.push(SurveyRow {
            name: name.clone(),
            size: q.size(),
            flags: rep?.flags,
        });
    }
    let mut premises: Vec<(Vec<&'static str>, &'static str)> = Vec::new();
    for a in FLAG_NAMES {
        for b in FLAG_NAMES {
            if a != b {
                premises.push((vec![a], b));
            }
        }
    }
    premises.push((vec!["I'", "C"], "D'"));
    let implications = premises
        .into_iter()
        .map(|(premise, conclusion)| {
            let mut premise_count = 0;
            let mut counterexamples = Vec::new();
            for row in &rows {
                let pre: Option<Vec<bool>> = premise.iter().map(|p| row.flags.get(p)).collect();
                let (Some(pre), Some(post)) = (pre, row.flags.get(conclusion)) else {
                    continue;
                };
                if pre.iter().all(|&b| b) {
                    premise_count += 1;
                    if !post {
                        counterexamples.push(row.name.clone());
                    }
                }
            }
            Implication {
                premise,
                conclusion,
                premise_count,
                counterexamples,
            }
        })
        .collect();
    Ok(Survey { rows, implications })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::{alexander, dihedral, trivial, unipotent_class_quandle, AlexanderParam};
    use crate::group::DEFAULT_CAP;

    #[test]
    fn fixed_points_of_trivial_and_alexander() {
        let t = trivial(4).unwrap().quandle;
        assert_eq!(fixed_points(&t, 2).unwrap(), vec![0, 1, 2, 3]);
        let a = alexander(7, 1, &AlexanderParam::Scalar(3)).unwrap().quandle;
        for q in 0..7 {
            assert_eq!(fixed_points(&a, q).unwrap(), vec![q]);
        }
        assert!(fixed_points(&a, 7).is_err());
    }

    #[test]
    fn alexander_five_two_satisfies_everything() {
        let a = alexander(5, 1, &AlexanderParam::Scalar(2)).unwrap().quandle;
        let rep = regularity_report(&a, DEFAULT_CAP, 0).unwrap();
        assert_eq!(
            rep.flags,
            Flags {
                i_prime: true,
                d_prime: true,
                c: true,
                phi_prime: Some(true)
            }
        );
        assert_eq!(rep.per_orbit_realizations.len(), 1);
    }

    #[test]
    fn unipotent_classes_and_isolation() {
        // over F_3 the class of J1 meets its centralizer only in J1
        let three = regularity_report(&unipotent_class_quandle(3).unwrap().quandle, DEFAULT_CAP, 0).unwrap();
        assert!(three.flags.c && three.flags.i_prime);
        let q = unipotent_class_quandle(5).unwrap().quandle;
        let rep = regularity_report(&q, DEFAULT_CAP, 0).unwrap();
        assert!(rep.flags.c && !rep.flags.i_prime);
        assert!(rep.fixed_sets.iter().all(|f| f.len() == 2));
        // each t_q reaches only the conjugates of q by class members
        assert!(!rep.flags.d_prime);
        assert_eq!(rep.column_images, vec![6; 12]);
        assert!(rep.fixed_sets.iter().enumerate().all(|(q, f)| f.contains(&q)));
    }

    #[test]
    fn trivial_quandle_flags() {
        let t = trivial(3).unwrap().quandle;
        let rep = regularity_report(&t, DEFAULT_CAP, 0).unwrap();
        assert!(!rep.flags.i_prime && !rep.flags.d_prime && !rep.flags.c);
        // each singleton orbit is realized by the trivial group
        assert_eq!(rep.flags.phi_prime, Some(true));
    }

    #[test]
    fn consequence_reports() {
        let a = alexander(7, 1, &AlexanderParam::Scalar(3)).unwrap().quandle;
        let rep = isolated_connected_consequence(&a);
        assert_eq!(rep.surjective_points.len(), 7);
        assert!(!rep.anomaly);
        let one = isolated_connected_consequence(&trivial(1).unwrap().quandle);
        assert!(one.i_prime && !one.anomaly);
        let r3 = isolated_connected_consequence(&dihedral(3).unwrap().quandle);
        assert!(r3.i_prime && r3.surjective_points == vec![0, 1, 2]);
    }

    #[test]
    fn survey_tables() {
        assert!(implication_survey(&[], DEFAULT_CAP, 0).unwrap().rows.is_empty());
        let corpus = vec![
            ("alexander(5,1,2)".to_string(), alexander(5, 1, &AlexanderParam::Scalar(2)).unwrap().quandle),
            ("unipotent(5)".to_string(), unipotent_class_quandle(5).unwrap().quandle),
        ];
        let s = implication_survey(&corpus, DEFAULT_CAP, 0).unwrap();
        assert!(s.rows[0].flags.i_prime && s.rows[0].flags.d_prime);
        let c_to_i = s
            .implications
            .iter()
            .find(|i| i.premise == vec!["C"] && i.conclusion == "I'")
            .unwrap();
        assert_eq!(c_to_i.counterexamples, vec!["unipotent(5)".to_string()]);
        let c_to_d = s
            .implications
            .iter()
            .find(|i| i.premise == vec!["C"] && i.conclusion == "D'")
            .unwrap();
        assert_eq!(c_to_d.premise_count, 2);
        assert_eq!(c_to_d.counterexamples, vec!["unipotent(5)".to_string()]);
    }
}
