//! Big Five vectors, the discrete profile table, distance measures,
//! nearest-profile labeling, and the stability/flexibility projection.

use std::collections::BTreeSet;
use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::Result;

/// The five personality factors, in canonical `(O, C, E, A, N)` order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Factor {
    Openness,
    Conscientiousness,
    Extraversion,
    Agreeableness,
    Neuroticism,
}

impl Factor {
    pub const ALL: [Factor; 5] = [
        Factor::Openness,
        Factor::Conscientiousness,
        Factor::Extraversion,
        Factor::Agreeableness,
        Factor::Neuroticism,
    ];

    pub fn code(&self) -> char {
        match self {
            Factor::Openness => 'O',
            Factor::Conscientiousness => 'C',
            Factor::Extraversion => 'E',
            Factor::Agreeableness => 'A',
            Factor::Neuroticism => 'N',
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Factor::Openness => "Openness",
            Factor::Conscientiousness => "Conscientiousness",
            Factor::Extraversion => "Extraversion",
            Factor::Agreeableness => "Agreeableness",
            Factor::Neuroticism => "Neuroticism",
        }
    }

    pub fn from_code(c: char) -> Option<Factor> {
        match c.to_ascii_uppercase() {
            'O' => Some(Factor::Openness),
            'C' => Some(Factor::Conscientiousness),
            'E' => Some(Factor::Extraversion),
            'A' => Some(Factor::Agreeableness),
            'N' => Some(Factor::Neuroticism),
            _ => None,
        }
    }

    /// Position in the canonical `(O, C, E, A, N)` component order.
    pub fn index(&self) -> usize {
        match self {
            Factor::Openness => 0,
            Factor::Conscientiousness => 1,
            Factor::Extraversion => 2,
            Factor::Agreeableness => 3,
            Factor::Neuroticism => 4,
        }
    }
}

/// A normalized Big Five point: every component in `[0, 1]`.
///
/// Construction validates range and finiteness, so a value of this type is
/// always a legal point of the model space.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BigFiveVector {
    openness: f64,
    conscientiousness: f64,
    extraversion: f64,
    agreeableness: f64,
    neuroticism: f64,
}

impl BigFiveVector {
    pub fn new(o: f64, c: f64, e: f64, a: f64, n: f64) -> Result<Self> {
        for (value, factor) in [(o, "openness"), (c, "conscientiousness"), (e, "extraversion"), (a, "agreeableness"), (n, "neuroticism")] {
            if !value.is_finite() || !(0.0..=1.0).contains(&value) {
                return Err(Error::OutOfRange { factor, value });
            }
        }
        Ok(BigFiveVector {
            openness: o,
            conscientiousness: c,
            extraversion: e,
            agreeableness: a,
            neuroticism: n,
        })
    }

    pub fn from_components(c: [f64; 5]) -> Result<Self> {
        BigFiveVector::new(c[0], c[1], c[2], c[3], c[4])
    }

    pub fn get(&self, factor: Factor) -> f64 {
        match factor {
            Factor::Openness => self.openness,
            Factor::Conscientiousness => self.conscientiousness,
            Factor::Extraversion => self.extraversion,
            Factor::Agreeableness => self.agreeableness,
            Factor::Neuroticism => self.neuroticism,
        }
    }

    /// Components in canonical `(O, C, E, A, N)` order.
    pub fn components(&self) -> [f64; 5] {
        [
            self.openness,
            self.conscientiousness,
            self.extraversion,
            self.agreeableness,
            self.neuroticism,
        ]
    }
}

/// Convenience constructor matching the `(o, c, e, a, n)` argument order.
pub fn make_big_five(o: f64, c: f64, e: f64, a: f64, n: f64) -> Result<BigFiveVector> {
    BigFiveVector::new(o, c, e, a, n)
}

/// The 2D stability/flexibility projection of a Big Five point.
///
/// `alpha` (cognitive stability) is `A + C + (1 - N)` and lies in `[0, 3]`;
/// `beta` (cognitive flexibility) is `E + O` and lies in `[0, 2]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CsCfPoint {
    pub alpha: f64,
    pub beta: f64,
}

/// Project a vector onto the stability (alpha) / flexibility (beta) plane.
pub fn cs_cf_project(v: &BigFiveVector) -> CsCfPoint {
    let [o, c, e, a, n] = v.components();
    CsCfPoint {
        alpha: a + c + (1.0 - n),
        beta: e + o,
    }
}

/// Standard L2 distance over the five components.
pub fn euclidean_distance(u: &BigFiveVector, w: &BigFiveVector) -> f64 {
    let uc = u.components();
    let wc = w.components();
    uc.iter()
        .zip(wc.iter())
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt()
}

/// How a zero-magnitude operand of [`cosine_similarity_with`] is handled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ZeroVectorPolicy {
    /// Reject with [`Error::ZeroVector`] (default: a zero personality
    /// vector is degenerate and should not pass silently).
    Error,
    /// Map the similarity to 0.0.
    MapToZero,
}

/// Cosine similarity of two vectors; errors on a zero-magnitude operand.
///
/// Components are nonnegative, so the result lies in `[0, 1]`.
pub fn cosine_similarity(u: &BigFiveVector, w: &BigFiveVector) -> Result<f64> {
    cosine_similarity_with(u, w, ZeroVectorPolicy::Error)
}

pub fn cosine_similarity_with(
    u: &BigFiveVector,
    w: &BigFiveVector,
    policy: ZeroVectorPolicy,
) -> Result<f64> {
    let uc = u.components();
    let wc = w.components();
    let dot: f64 = uc.iter().zip(wc.iter()).map(|(a, b)| a * b).sum();
    let nu: f64 = uc.iter().map(|a| a * a).sum::<f64>().sqrt();
    let nw: f64 = wc.iter().map(|a| a * a).sum::<f64>().sqrt();
    if nu == 0.0 || nw == 0.0 {
        return match policy {
            ZeroVectorPolicy::Error => Err(Error::ZeroVector),
            ZeroVectorPolicy::MapToZero => Ok(0.0),
        };
    }
    // Clamp rounding noise so callers can rely on the [0, 1] contract.
    Ok((dot / (nu * nw)).clamp(0.0, 1.0))
}

/// A named discrete point in Big Five space used as a classification target.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PersonalityProfile {
    pub name: String,
    pub traits: BigFiveVector,
}

/// The ordered table of discrete profiles.
///
/// Ordering is stable and defines the tie-break for nearest-profile
/// labeling: on equal distance the earlier entry wins.
#[derive(Debug, Clone, PartialEq)]
pub struct ProfileTable {
    profiles: Vec<PersonalityProfile>,
    provenance: String,
}

/// Number of entries the default table must contain.
pub const DEFAULT_PROFILE_COUNT: usize = 20;

impl ProfileTable {
    pub fn new(profiles: Vec<PersonalityProfile>, provenance: impl Into<String>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for p in &profiles {
            if !seen.insert(p.name.clone()) {
                return Err(Error::parse(
                    format!("profile '{}'", p.name),
                    "duplicate profile name",
                ));
            }
        }
        Ok(ProfileTable {
            profiles,
            provenance: provenance.into(),
        })
    }

    pub fn profiles(&self) -> &[PersonalityProfile] {
        &self.profiles
    }

    pub fn provenance(&self) -> &str {
        &self.provenance
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&PersonalityProfile> {
        self.profiles.iter().find(|p| p.name == name)
    }

    /// The profile minimizing Euclidean distance to `v`; ties break to the
    /// earlier table entry. Errors on an empty table.
    pub fn nearest(&self, v: &BigFiveVector) -> Result<(&str, f64)> {
        let mut best: Option<(&str, f64)> = None;
        for p in &self.profiles {
            let d = euclidean_distance(v, &p.traits);
            match best {
                Some((_, bd)) if d >= bd => {}
                _ => best = Some((p.name.as_str(), d)),
            }
        }
        best.ok_or(Error::EmptyTable)
    }

    /// Smallest pairwise distance between distinct table entries.
    ///
    /// Used to assert that quantization noise cannot flip a label.
    pub fn min_inter_profile_distance(&self) -> f64 {
        let mut min = f64::INFINITY;
        for (i, p) in self.profiles.iter().enumerate() {
            for q in &self.profiles[i + 1..] {
                min = min.min(euclidean_distance(&p.traits, &q.traits));
            }
        }
        min
    }

    /// Parse the delimited form: optional `# ` provenance lines, then a
    /// header `name,O,C,E,A,N`, then one row per profile.
    pub fn from_csv_reader(reader: impl Read, strict_default_count: bool) -> Result<Self> {
        let mut text = String::new();
        let mut reader = reader;
        reader.read_to_string(&mut text)?;

        let mut provenance_lines = Vec::new();
        for line in text.lines() {
            if let Some(rest) = line.strip_prefix('#') {
                provenance_lines.push(rest.trim().to_string());
            } else {
                break;
            }
        }
        let provenance = provenance_lines.join("\n");

        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(text.as_bytes());
        let headers = rdr.headers()?.clone();
        let expected = ["name", "O", "C", "E", "A", "N"];
        let header_ok = headers.len() == 6
            && headers.get(0).map(|h| h.eq_ignore_ascii_case("name")) == Some(true)
            && (1..6).all(|i| {
                headers
                    .get(i)
                    .map(|h| {
                        h.eq_ignore_ascii_case(expected[i])
                            || h.eq_ignore_ascii_case(Factor::from_code(expected[i].chars().next().unwrap()).unwrap().name())
                    })
                    .unwrap_or(false)
            });
        if !header_ok {
            return Err(Error::parse(
                "profile table header",
                format!("expected 'name,O,C,E,A,N', found '{}'", headers.iter().collect::<Vec<_>>().join(",")),
            ));
        }

        let mut profiles = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let line = record
                .position()
                .map(|p| p.line().to_string())
                .unwrap_or_else(|| "?".into());
            let ctx = |msg: String| Error::parse(format!("profile table line {line}"), msg);
            if record.len() != 6 {
                return Err(ctx(format!("expected 6 fields, found {}", record.len())));
            }
            let name = record[0].to_string();
            if name.is_empty() {
                return Err(ctx("empty profile name".into()));
            }
            let mut vals = [0.0f64; 5];
            for (i, v) in vals.iter_mut().enumerate() {
                let cell = &record[i + 1];
                *v = cell.parse::<f64>().map_err(|_| {
                    ctx(format!("'{}': {} is not a number", name, cell))
                })?;
            }
            let traits = BigFiveVector::from_components(vals).map_err(|e| {
                ctx(format!("'{}': {}", name, e))
            })?;
            profiles.push(PersonalityProfile { name, traits });
        }

        if strict_default_count && profiles.len() != DEFAULT_PROFILE_COUNT {
            return Err(Error::Cardinality {
                what: "profiles",
                expected: DEFAULT_PROFILE_COUNT,
                found: profiles.len(),
            });
        }
        ProfileTable::new(profiles, provenance)
    }

    /// Parse the structured form. Both formats load to identical tables.
    pub fn from_toml_str(text: &str, strict_default_count: bool) -> Result<Self> {
        #[derive(Deserialize)]
        struct ProfileRow {
            name: String,
            #[serde(alias = "openness")]
            O: f64,
            #[serde(alias = "conscientiousness")]
            C: f64,
            #[serde(alias = "extraversion")]
            E: f64,
            #[serde(alias = "agreeableness")]
            A: f64,
            #[serde(alias = "neuroticism")]
            N: f64,
        }
        #[derive(Deserialize)]
        struct TableDoc {
            #[serde(default)]
            provenance: String,
            profiles: Vec<ProfileRow>,
        }
        let doc: TableDoc = toml::from_str(text)
            .map_err(|e| Error::parse("profile table", e.to_string()))?;
        let mut profiles = Vec::new();
        for row in doc.profiles {
            let traits = BigFiveVector::new(row.O, row.C, row.E, row.A, row.N)
                .map_err(|e| Error::parse(format!("profile '{}'", row.name), e.to_string()))?;
            profiles.push(PersonalityProfile { name: row.name, traits });
        }
        if strict_default_count && profiles.len() != DEFAULT_PROFILE_COUNT {
            return Err(Error::Cardinality {
                what: "profiles",
                expected: DEFAULT_PROFILE_COUNT,
                found: profiles.len(),
            });
        }
        ProfileTable::new(profiles, doc.provenance)
    }

    /// Load from a path, dispatching on extension (`.toml` vs delimited).
    pub fn load_path(path: &Path, strict_default_count: bool) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        if path.extension().and_then(|e| e.to_str()) == Some("toml") {
            ProfileTable::from_toml_str(&text, strict_default_count)
        } else {
            ProfileTable::from_csv_reader(text.as_bytes(), strict_default_count)
        }
    }

    /// The table bundled with the crate (see `data/profiles.csv` for its
    /// provenance note).
    pub fn embedded_default() -> Self {
        ProfileTable::from_csv_reader(DEFAULT_PROFILES_CSV.as_bytes(), true)
            .expect("bundled profile table is valid")
    }

    /// Delimited rendering; inverse of [`ProfileTable::from_csv_reader`].
    pub fn to_csv_string(&self) -> String {
        let mut out = String::new();
        for line in self.provenance.lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
        out.push_str("name,O,C,E,A,N\n");
        for p in &self.profiles {
            let [o, c, e, a, n] = p.traits.components();
            out.push_str(&format!("{},{},{},{},{},{}\n", p.name, o, c, e, a, n));
        }
        out
    }
}

/// Load a profile table from any readable delimited source.
pub fn load_profile_table(reader: impl Read, strict_default_count: bool) -> Result<ProfileTable> {
    ProfileTable::from_csv_reader(reader, strict_default_count)
}

pub const DEFAULT_PROFILES_CSV: &str = include_str!("../data/profiles.csv");

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use proptest::prelude::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn v(o: f64, c: f64, e: f64, a: f64, n: f64) -> BigFiveVector {
        BigFiveVector::new(o, c, e, a, n).unwrap()
    }

    #[test]
    fn test_make_big_five_boundaries() {
        assert!(make_big_five(1.0, 1.0, 1.0, 1.0, 1.0).is_ok());
        assert!(make_big_five(0.5, 0.5, 0.5, 0.5, 0.5).is_ok());
        let err = make_big_five(1.2, 0.0, 0.0, 0.0, 0.0).unwrap_err();
        assert!(err.to_string().contains("openness out of range"));
        let err = make_big_five(0.0, 0.0, 0.0, f64::NAN, 0.0).unwrap_err();
        assert!(err.to_string().contains("agreeableness"));
    }

    #[test]
    fn test_cs_cf_project_extremes() {
        let p = cs_cf_project(&v(1.0, 1.0, 1.0, 1.0, 0.0));
        assert_eq!(p.alpha, 3.0);
        assert_eq!(p.beta, 2.0);
        let p = cs_cf_project(&v(0.0, 0.0, 0.0, 0.0, 1.0));
        assert_eq!(p.alpha, 0.0);
        assert_eq!(p.beta, 0.0);
        let p = cs_cf_project(&v(0.5, 0.5, 0.5, 0.5, 0.5));
        assert_abs_diff_eq!(p.alpha, 1.5, epsilon = 1e-12);
        assert_abs_diff_eq!(p.beta, 1.0, epsilon = 1e-12);
    }

    #[test]
    fn test_euclidean_distance_cases() {
        let u = v(0.3, 0.3, 0.3, 0.3, 0.3);
        assert_eq!(euclidean_distance(&u, &u), 0.0);
        let d = euclidean_distance(&v(0.0, 0.0, 0.0, 0.0, 0.0), &v(1.0, 1.0, 1.0, 1.0, 1.0));
        assert_abs_diff_eq!(d, 5.0f64.sqrt(), epsilon = 1e-12);
        // 3-4-5 triangle scaled by 0.1
        let d = euclidean_distance(&v(0.1, 0.0, 0.0, 0.0, 0.0), &v(0.4, 0.4, 0.0, 0.0, 0.0));
        assert_abs_diff_eq!(d, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn test_cosine_similarity_cases() {
        let u = v(0.2, 0.4, 0.1, 0.9, 0.3);
        assert_abs_diff_eq!(cosine_similarity(&u, &u).unwrap(), 1.0, epsilon = 1e-12);
        let a = v(1.0, 0.0, 0.0, 0.0, 0.0);
        let b = v(0.0, 1.0, 0.0, 0.0, 0.0);
        assert_eq!(cosine_similarity(&a, &b).unwrap(), 0.0);
        let c = v(1.0, 1.0, 0.0, 0.0, 0.0);
        assert_abs_diff_eq!(
            cosine_similarity(&c, &a).unwrap(),
            1.0 / 2.0f64.sqrt(),
            epsilon = 1e-12
        );
    }

    #[test]
    fn test_cosine_similarity_zero_vector_policy() {
        let z = v(0.0, 0.0, 0.0, 0.0, 0.0);
        let u = v(0.5, 0.5, 0.5, 0.5, 0.5);
        assert!(matches!(cosine_similarity(&z, &u), Err(Error::ZeroVector)));
        assert_eq!(
            cosine_similarity_with(&z, &u, ZeroVectorPolicy::MapToZero).unwrap(),
            0.0
        );
    }

    #[test]
    fn test_default_table_loads_20_unique() {
        let table = ProfileTable::embedded_default();
        assert_eq!(table.len(), 20);
        assert_eq!(table.profiles()[0].name, "Paranoid");
        assert_eq!(table.profiles()[19].name, "Laissez-faire");
        assert!(!table.provenance().is_empty());
    }

    #[test]
    fn test_table_strict_count_and_range_errors() {
        let short = "name,O,C,E,A,N\nOnly,0.5,0.5,0.5,0.5,0.5\n";
        let err = ProfileTable::from_csv_reader(short.as_bytes(), true).unwrap_err();
        assert!(matches!(err, Error::Cardinality { .. }));
        assert!(ProfileTable::from_csv_reader(short.as_bytes(), false).is_ok());

        let bad = "name,O,C,E,A,N\nX,1.5,0.5,0.5,0.5,0.5\n";
        let err = ProfileTable::from_csv_reader(bad.as_bytes(), false).unwrap_err();
        assert!(err.to_string().contains("line"));

        let dup = "name,O,C,E,A,N\nX,0.5,0.5,0.5,0.5,0.5\nX,0.1,0.5,0.5,0.5,0.5\n";
        let err = ProfileTable::from_csv_reader(dup.as_bytes(), false).unwrap_err();
        assert!(err.to_string().contains("duplicate"));
    }

    #[test]
    fn test_csv_and_toml_forms_round_trip_identically() {
        let table = ProfileTable::embedded_default();
        let reparsed =
            ProfileTable::from_csv_reader(table.to_csv_string().as_bytes(), true).unwrap();
        assert_eq!(table, reparsed);

        let mut toml_text = format!("provenance = {:?}\n", table.provenance());
        for p in table.profiles() {
            let [o, c, e, a, n] = p.traits.components();
            toml_text.push_str(&format!(
                "[[profiles]]\nname = {:?}\nO = {}\nC = {}\nE = {}\nA = {}\nN = {}\n",
                p.name, o, c, e, a, n
            ));
        }
        let from_toml = ProfileTable::from_toml_str(&toml_text, true).unwrap();
        assert_eq!(table, from_toml);
    }

    #[test]
    fn test_nearest_profile_self_labels() {
        let table = ProfileTable::embedded_default();
        for p in table.profiles() {
            let (name, d) = table.nearest(&p.traits).unwrap();
            assert_eq!(name, p.name);
            assert_eq!(d, 0.0);
        }
    }

    #[test]
    fn test_nearest_profile_tie_breaks_to_earlier_entry() {
        let a = PersonalityProfile { name: "first".into(), traits: v(0.0, 0.0, 0.0, 0.0, 0.0) };
        let b = PersonalityProfile { name: "second".into(), traits: v(1.0, 0.0, 0.0, 0.0, 0.0) };
        let table = ProfileTable::new(vec![a, b], "test").unwrap();
        let midpoint = v(0.5, 0.0, 0.0, 0.0, 0.0);
        let (name, d) = table.nearest(&midpoint).unwrap();
        assert_eq!(name, "first");
        assert_abs_diff_eq!(d, 0.5, epsilon = 1e-12);
    }

    #[test]
    fn test_nearest_profile_empty_table_errors() {
        let table = ProfileTable::new(vec![], "empty").unwrap();
        let u = v(0.5, 0.5, 0.5, 0.5, 0.5);
        assert!(matches!(table.nearest(&u), Err(Error::EmptyTable)));
    }

    #[test]
    fn test_nearest_profile_matches_brute_force_scan() {
        // Independent oracle: naive exhaustive argmin with its own distance code.
        let table = ProfileTable::embedded_default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..1000 {
            let u = v(
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
                rng.random_range(0.0..=1.0),
            );
            let mut best_idx = 0usize;
            let mut best_sq = f64::INFINITY;
            for (i, p) in table.profiles().iter().enumerate() {
                let pc = p.traits.components();
                let uc = u.components();
                let mut sq = 0.0;
                for k in 0..5 {
                    let diff = pc[k] - uc[k];
                    sq += diff * diff;
                }
                if sq < best_sq {
                    best_sq = sq;
                    best_idx = i;
                }
            }
            let (name, _) = table.nearest(&u).unwrap();
            assert_eq!(name, table.profiles()[best_idx].name);
        }
    }

    #[test]
    fn test_default_table_separation_exceeds_quantization_bound() {
        let table = ProfileTable::embedded_default();
        let bound = 2.0 * 5.0f64.sqrt() / 80.0;
        assert!(table.min_inter_profile_distance() > bound);
    }

    proptest! {
        #[test]
        fn prop_cs_cf_ranges(o in 0.0..=1.0f64, c in 0.0..=1.0f64, e in 0.0..=1.0f64,
                             a in 0.0..=1.0f64, n in 0.0..=1.0f64) {
            let p = cs_cf_project(&v(o, c, e, a, n));
            prop_assert!((0.0..=3.0).contains(&p.alpha));
            prop_assert!((0.0..=2.0).contains(&p.beta));
        }

        #[test]
        fn prop_metric_axioms(xs in proptest::array::uniform15(0.0..=1.0f64)) {
            let u = BigFiveVector::from_components([xs[0], xs[1], xs[2], xs[3], xs[4]]).unwrap();
            let w = BigFiveVector::from_components([xs[5], xs[6], xs[7], xs[8], xs[9]]).unwrap();
            let z = BigFiveVector::from_components([xs[10], xs[11], xs[12], xs[13], xs[14]]).unwrap();
            let duw = euclidean_distance(&u, &w);
            prop_assert!(euclidean_distance(&u, &u) == 0.0);
            prop_assert!((duw - euclidean_distance(&w, &u)).abs() < 1e-12);
            prop_assert!(duw <= euclidean_distance(&u, &z) + euclidean_distance(&z, &w) + 1e-12);
        }

        #[test]
        fn prop_cosine_bounds(xs in proptest::array::uniform10(0.0..=1.0f64)) {
            let u = BigFiveVector::from_components([xs[0], xs[1], xs[2], xs[3], xs[4]]).unwrap();
            let w = BigFiveVector::from_components([xs[5], xs[6], xs[7], xs[8], xs[9]]).unwrap();
            if let Ok(s) = cosine_similarity(&u, &w) {
                prop_assert!((0.0..=1.0).contains(&s));
            }
            let mag: f64 = u.components().iter().map(|x| x * x).sum();
            if mag > 0.0 {
                prop_assert!((cosine_similarity(&u, &u).unwrap() - 1.0).abs() < 1e-12);
            }
        }
    }
}
