//! The 50-item questionnaire model: keyed scoring with reverse keying and
//! linear normalization of raw factor totals to `[0, 1]`.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::personality::{cs_cf_project, BigFiveVector, CsCfPoint, Factor, ProfileTable};
use crate::Result;

/// Number of statements in the questionnaire.
pub const ITEM_COUNT: usize = 50;
/// Statements per factor.
pub const ITEMS_PER_FACTOR: usize = 10;
/// Smallest possible raw factor total (all keyed values 1).
pub const RAW_MIN: u16 = 10;
/// Largest possible raw factor total (all keyed values 5).
pub const RAW_MAX: u16 = 50;

/// Whether agreeing with a statement raises or lowers its factor score.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Positive,
    Negative,
}

impl Direction {
    pub fn parse(token: &str) -> Option<Direction> {
        match token.trim().to_ascii_lowercase().as_str() {
            "positive" | "pos" | "+" | "1" => Some(Direction::Positive),
            "negative" | "neg" | "-" | "-1" => Some(Direction::Negative),
            _ => None,
        }
    }
}

/// One questionnaire statement and how it is scored.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScoringItem {
    /// Factor code plus 1-based index, e.g. `E3`; fixes the item's column
    /// in the dataset's native answer order.
    pub id: String,
    pub factor: Factor,
    pub direction: Direction,
    pub statement: String,
}

/// Answer columns are stored in the dataset's native block order.
/// `storage_index` maps an item id to its position in that order.
const BLOCK_ORDER: [Factor; 5] = [
    Factor::Extraversion,
    Factor::Neuroticism,
    Factor::Agreeableness,
    Factor::Conscientiousness,
    Factor::Openness,
];

/// Position of item `id` (e.g. `A7`) within a stored 50-answer row.
pub fn storage_index(id: &str) -> Result<usize> {
    let mut chars = id.chars();
    let code = chars
        .next()
        .ok_or_else(|| Error::parse("item id", "empty id"))?;
    let factor = Factor::from_code(code)
        .ok_or_else(|| Error::parse(format!("item id '{id}'"), "unknown factor code"))?;
    let num: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::parse(format!("item id '{id}'"), "expected <factor><1-10>"))?;
    if !(1..=ITEMS_PER_FACTOR).contains(&num) {
        return Err(Error::parse(
            format!("item id '{id}'"),
            "item number must be 1..=10",
        ));
    }
    let block = BLOCK_ORDER
        .iter()
        .position(|f| *f == factor)
        .expect("all factors are in block order");
    Ok(block * ITEMS_PER_FACTOR + (num - 1))
}

/// The full 50-item key: ten items per factor, unique ids, directions set.
#[derive(Debug, Clone, PartialEq)]
pub struct ScoringKey {
    items: Vec<ScoringItem>,
}

impl ScoringKey {
    pub fn new(items: Vec<ScoringItem>) -> Result<Self> {
        if items.len() != ITEM_COUNT {
            return Err(Error::Cardinality {
                what: "scoring key items",
                expected: ITEM_COUNT,
                found: items.len(),
            });
        }
        let mut seen = [false; ITEM_COUNT];
        for item in &items {
            let idx = storage_index(&item.id)?;
            let declared = Factor::from_code(item.id.chars().next().unwrap()).unwrap();
            if declared != item.factor {
                return Err(Error::parse(
                    format!("item '{}'", item.id),
                    format!("id declares factor {} but key says {}", declared.code(), item.factor.code()),
                ));
            }
            if seen[idx] {
                return Err(Error::parse(format!("item '{}'", item.id), "duplicate item id"));
            }
            seen[idx] = true;
        }
        // Full coverage of all 50 slots follows from count + uniqueness,
        // which also gives exactly ten items per factor.
        Ok(ScoringKey { items })
    }

    pub fn items(&self) -> &[ScoringItem] {
        &self.items
    }

    pub fn item(&self, id: &str) -> Option<&ScoringItem> {
        self.items.iter().find(|i| i.id == id)
    }

    /// Statements ordered by storage index; this is the order statements
    /// are presented in prompts and the order answers are stored in.
    pub fn statements_in_storage_order(&self) -> Vec<&ScoringItem> {
        let mut ordered: Vec<(usize, &ScoringItem)> = self
            .items
            .iter()
            .map(|i| (storage_index(&i.id).expect("validated"), i))
            .collect();
        ordered.sort_by_key(|(idx, _)| *idx);
        ordered.into_iter().map(|(_, i)| i).collect()
    }

    /// Parse the delimited key format: header
    /// `item_id,factor,direction,statement`, one row per item.
    pub fn from_csv_reader(reader: impl Read) -> Result<Self> {
        let mut rdr = csv::ReaderBuilder::new()
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .from_reader(reader);
        let headers = rdr.headers()?;
        let expected = ["item_id", "factor", "direction", "statement"];
        if headers.len() != 4
            || !(0..4).all(|i| headers.get(i).map(|h| h.eq_ignore_ascii_case(expected[i])) == Some(true))
        {
            return Err(Error::parse(
                "scoring key header",
                format!("expected 'item_id,factor,direction,statement', found '{}'", headers.iter().collect::<Vec<_>>().join(",")),
            ));
        }
        let mut items = Vec::new();
        for record in rdr.records() {
            let record = record?;
            let line = record
                .position()
                .map(|p| p.line().to_string())
                .unwrap_or_else(|| "?".into());
            let ctx = |msg: String| Error::parse(format!("scoring key line {line}"), msg);
            if record.len() != 4 {
                return Err(ctx(format!("expected 4 fields, found {}", record.len())));
            }
            let id = record[0].to_string();
            let factor = record[1]
                .chars()
                .next()
                .and_then(Factor::from_code)
                .filter(|_| record[1].len() == 1)
                .ok_or_else(|| ctx(format!("unknown factor code '{}'", &record[1])))?;
            let direction = Direction::parse(&record[2])
                .ok_or_else(|| ctx(format!("unknown direction token '{}'", &record[2])))?;
            let statement = record[3].to_string();
            if statement.is_empty() {
                return Err(ctx(format!("item '{id}' has an empty statement")));
            }
            items.push(ScoringItem { id, factor, direction, statement });
        }
        ScoringKey::new(items)
    }

    pub fn load_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        ScoringKey::from_csv_reader(text.as_bytes())
    }

    /// The public-domain 50-item key bundled with the crate.
    pub fn embedded_default() -> Self {
        ScoringKey::from_csv_reader(DEFAULT_KEY_CSV.as_bytes()).expect("bundled key is valid")
    }
}

pub fn load_scoring_key(reader: impl Read) -> Result<ScoringKey> {
    ScoringKey::from_csv_reader(reader)
}

pub const DEFAULT_KEY_CSV: &str = include_str!("../data/ipip50_key.csv");

/// Where a response came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ResponseProvenance {
    HumanDataset,
    LlmGenerated,
    Mock,
}

/// Fifty Likert answers in `{1..5}`, stored in the dataset's native
/// answer-column order (E1-E10, N1-N10, A1-A10, C1-C10, O1-O10).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LikertResponse {
    answers: Vec<u8>,
    pub provenance: ResponseProvenance,
}

impl LikertResponse {
    pub fn new(answers: Vec<u8>, provenance: ResponseProvenance) -> Result<Self> {
        if answers.len() != ITEM_COUNT {
            return Err(Error::Cardinality {
                what: "answers",
                expected: ITEM_COUNT,
                found: answers.len(),
            });
        }
        for &a in &answers {
            if !(1..=5).contains(&a) {
                return Err(Error::LikertRange { value: a as i64 });
            }
        }
        Ok(LikertResponse { answers, provenance })
    }

    pub fn answers(&self) -> &[u8] {
        &self.answers
    }
}

/// Raw per-factor totals, each in `[10, 50]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RawFactorScores {
    totals: [u16; 5],
}

impl RawFactorScores {
    pub fn get(&self, factor: Factor) -> u16 {
        self.totals[factor.index()]
    }

    /// Totals in canonical `(O, C, E, A, N)` order.
    pub fn totals(&self) -> [u16; 5] {
        self.totals
    }
}

/// Reverse-key an answer: positive items pass through, negative items map
/// `a` to `6 - a`.
pub fn key_item_value(answer: u8, direction: Direction) -> u8 {
    debug_assert!((1..=5).contains(&answer));
    match direction {
        Direction::Positive => answer,
        Direction::Negative => 6 - answer,
    }
}

/// Sum keyed item values into per-factor raw totals.
pub fn evaluate_raw(resp: &LikertResponse, key: &ScoringKey) -> Result<RawFactorScores> {
    if resp.answers().len() != key.items().len() {
        return Err(Error::LengthMismatch {
            expected: key.items().len(),
            found: resp.answers().len(),
        });
    }
    let mut totals = [0u16; 5];
    for item in key.items() {
        let idx = storage_index(&item.id).expect("validated key");
        let value = key_item_value(resp.answers()[idx], item.direction);
        totals[item.factor.index()] += value as u16;
    }
    Ok(RawFactorScores { totals })
}

/// Linear map of each raw total from `[10, 50]` onto `[0, 1]`:
/// `(raw - 10) / 40`.
pub fn normalize(raw: &RawFactorScores) -> BigFiveVector {
    let t = raw.totals();
    let norm = |x: u16| (x as f64 - RAW_MIN as f64) / (RAW_MAX - RAW_MIN) as f64;
    BigFiveVector::new(norm(t[0]), norm(t[1]), norm(t[2]), norm(t[3]), norm(t[4]))
        .expect("raw totals in [10,50] normalize into [0,1]")
}

/// A fully scored response: normalized vector, raw totals, nearest-profile
/// label, and the stability/flexibility projection.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvaluatedResult {
    pub vector: BigFiveVector,
    pub raw: RawFactorScores,
    pub label: Option<String>,
    pub label_distance: Option<f64>,
    pub cscf: CsCfPoint,
}

/// Score, normalize, project, and label one response.
pub fn evaluate(
    resp: &LikertResponse,
    key: &ScoringKey,
    table: &ProfileTable,
) -> Result<EvaluatedResult> {
    let raw = evaluate_raw(resp, key)?;
    let vector = normalize(&raw);
    let (label, distance) = table.nearest(&vector)?;
    Ok(EvaluatedResult {
        vector,
        raw,
        label: Some(label.to_string()),
        label_distance: Some(distance),
        cscf: cs_cf_project(&vector),
    })
}
