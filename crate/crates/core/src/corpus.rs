//! The event → claim → tweet data model.
//!
//! A corpus is built from flat per-tweet records (one JSON object per line in
//! the on-disk format; see the `rumorlens` crate). Claim-level fields are
//! repeated on every tweet record and checked for consistency here. After
//! validation a [`Corpus`] is immutable and safe to share across threads.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Stance of a tweet toward the claim it discusses. Parsed through but not
/// used as a predictor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stance {
    Supporting,
    Denying,
    Questioning,
    Commenting,
}

impl Stance {
    pub fn as_str(&self) -> &'static str {
        match self {
            Stance::Supporting => "supporting",
            Stance::Denying => "denying",
            Stance::Questioning => "questioning",
            Stance::Commenting => "commenting",
        }
    }

    pub fn parse(s: &str) -> Option<Stance> {
        match s {
            "supporting" => Some(Stance::Supporting),
            "denying" => Some(Stance::Denying),
            "questioning" => Some(Stance::Questioning),
            "commenting" => Some(Stance::Commenting),
            _ => None,
        }
    }
}

/// One crowdsourced certainty judgment for a tweet.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertaintyLabel {
    Uncertain,
    SomewhatCertain,
    Certain,
    /// Annotator could not judge; excluded from aggregation.
    Underspecified,
}

impl CertaintyLabel {
    pub fn as_str(&self) -> &'static str {
        match self {
            CertaintyLabel::Uncertain => "uncertain",
            CertaintyLabel::SomewhatCertain => "somewhat-certain",
            CertaintyLabel::Certain => "certain",
            CertaintyLabel::Underspecified => "underspecified",
        }
    }

    pub fn parse(s: &str) -> Option<CertaintyLabel> {
        match s {
            "uncertain" => Some(CertaintyLabel::Uncertain),
            "somewhat-certain" => Some(CertaintyLabel::SomewhatCertain),
            "certain" => Some(CertaintyLabel::Certain),
            "underspecified" => Some(CertaintyLabel::Underspecified),
            _ => None,
        }
    }
}

/// Whether a claim was resolved as true (verified) or false (falsified).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Resolution {
    True,
    False,
}

impl Resolution {
    pub fn as_str(&self) -> &'static str {
        match self {
            Resolution::True => "true",
            Resolution::False => "false",
        }
    }

    pub fn parse(s: &str) -> Option<Resolution> {
        match s {
            "true" => Some(Resolution::True),
            "false" => Some(Resolution::False),
            _ => None,
        }
    }
}

/// A single micropost with its annotations.
#[derive(Clone, Debug, PartialEq)]
pub struct Tweet {
    pub id: String,
    pub claim_id: String,
    pub text: String,
    /// UTC epoch seconds.
    pub timestamp: i64,
    pub certainty_labels: Option<Vec<CertaintyLabel>>,
    pub is_resolving: bool,
    pub stance: Option<Stance>,
}

/// Flat input record for corpus assembly; claim-level fields (`event`,
/// `resolution`) are repeated per tweet in the wire format.
#[derive(Clone, Debug, PartialEq)]
pub struct TweetInput {
    pub id: String,
    pub claim_id: String,
    pub event: String,
    pub text: String,
    pub timestamp: i64,
    pub resolving: bool,
    pub resolution: Resolution,
    pub certainty_labels: Option<Vec<CertaintyLabel>>,
    pub stance: Option<Stance>,
}

/// A rumorous claim and its time-ordered tweet sequence.
///
/// Tweets are sorted ascending by timestamp, ties broken by id, so the
/// position of a tweet in [`Claim::tweets`] plus one is its rank.
#[derive(Clone, Debug, PartialEq)]
pub struct Claim {
    id: String,
    event: String,
    resolution: Resolution,
    tweets: Vec<Tweet>,
    resolving_index: Option<usize>,
}

impl Claim {
    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn event(&self) -> &str {
        &self.event
    }

    pub fn resolution(&self) -> Resolution {
        self.resolution
    }

    /// Tweets in timeline order.
    pub fn tweets(&self) -> &[Tweet] {
        &self.tweets
    }

    /// Zero-based index of the resolving tweet. `None` only for claims
    /// retained via [`ValidationOptions::keep_unresolved`].
    pub fn resolving_index(&self) -> Option<usize> {
        self.resolving_index
    }

    pub fn resolving_tweet(&self) -> Option<&Tweet> {
        self.resolving_index.map(|i| &self.tweets[i])
    }

    /// One-based rank of the resolving tweet.
    pub fn resolving_rank(&self) -> Option<usize> {
        self.resolving_index.map(|i| i + 1)
    }

    pub fn is_resolved(&self) -> bool {
        self.resolving_index.is_some()
    }
}

/// Tweets of a claim paired with their one-based timeline ranks. The rank is
/// the x-coordinate for all trend fitting downstream.
pub fn index_tweets(claim: &Claim) -> Vec<(usize, &Tweet)> {
    claim
        .tweets()
        .iter()
        .enumerate()
        .map(|(i, t)| (i + 1, t))
        .collect()
}

/// A validated corpus. Immutable after construction.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Corpus {
    claims: Vec<Claim>,
    events: BTreeSet<String>,
}

impl Corpus {
    pub fn claims(&self) -> &[Claim] {
        &self.claims
    }

    pub fn events(&self) -> &BTreeSet<String> {
        &self.events
    }

    pub fn claim(&self, id: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.id == id)
    }

    /// Claims with a resolving tweet, i.e. the ones usable for RES/VAL
    /// training.
    pub fn resolved_claims(&self) -> impl Iterator<Item = &Claim> {
        self.claims.iter().filter(|c| c.is_resolved())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct ValidationOptions {
    /// Retain claims without a resolving tweet instead of dropping them.
    /// Such claims support feature extraction but are excluded from RES/VAL
    /// task assembly.
    pub keep_unresolved: bool,
}

/// Non-fatal findings from corpus assembly.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CorpusReport {
    /// Claim ids dropped for lacking a resolving tweet.
    pub dropped_unresolved: Vec<String>,
    /// Claim ids retained without a resolving tweet (keep_unresolved mode).
    pub kept_unresolved: Vec<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum CorpusError {
    DuplicateTweetId { id: String },
    NegativeTimestamp { tweet_id: String },
    MultipleResolving { claim_id: String },
    ClaimTooSmall { claim_id: String, n_tweets: usize },
    InconsistentClaimField { claim_id: String, field: &'static str },
    Empty,
}

impl fmt::Display for CorpusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CorpusError::DuplicateTweetId { id } => {
                write!(f, "duplicate tweet id {id:?}")
            }
            CorpusError::NegativeTimestamp { tweet_id } => {
                write!(f, "tweet {tweet_id:?} has a negative timestamp")
            }
            CorpusError::MultipleResolving { claim_id } => {
                write!(f, "claim {claim_id:?} has more than one resolving tweet")
            }
            CorpusError::ClaimTooSmall { claim_id, n_tweets } => {
                write!(
                    f,
                    "claim {claim_id:?} has {n_tweets} tweet(s); at least 2 are required"
                )
            }
            CorpusError::InconsistentClaimField { claim_id, field } => {
                write!(
                    f,
                    "claim {claim_id:?} has inconsistent values for claim-level field {field:?}"
                )
            }
            CorpusError::Empty => write!(f, "no tweet records supplied"),
        }
    }
}

impl core::error::Error for CorpusError {}

/// Assemble and validate a corpus from flat tweet records.
///
/// Tweets are grouped by `claim_id` (claims keep their order of first
/// appearance) and sorted by `(timestamp, id)` within each claim. Claims
/// without a resolving tweet are dropped with a report entry unless
/// `keep_unresolved` is set; claims left with fewer than 2 tweets or more
/// than one resolving tweet are errors.
pub fn build_corpus(
    records: Vec<TweetInput>,
    opts: &ValidationOptions,
) -> Result<(Corpus, CorpusReport), CorpusError> {
    if records.is_empty() {
        return Err(CorpusError::Empty);
    }

    let mut seen_ids = BTreeSet::new();
    for rec in &records {
        if rec.timestamp < 0 {
            return Err(CorpusError::NegativeTimestamp {
                tweet_id: rec.id.clone(),
            });
        }
        if !seen_ids.insert(rec.id.clone()) {
            return Err(CorpusError::DuplicateTweetId { id: rec.id.clone() });
        }
    }

    // Group by claim id, preserving first-appearance order.
    let mut claim_order: Vec<String> = Vec::new();
    let mut grouped: alloc::collections::BTreeMap<String, Vec<TweetInput>> =
        alloc::collections::BTreeMap::new();
    for rec in records {
        if !grouped.contains_key(&rec.claim_id) {
            claim_order.push(rec.claim_id.clone());
        }
        grouped.entry(rec.claim_id.clone()).or_default().push(rec);
    }

    let mut report = CorpusReport::default();
    let mut claims = Vec::new();
    let mut events = BTreeSet::new();

    for claim_id in claim_order {
        let mut recs = grouped.remove(&claim_id).expect("claim id present");

        let event = recs[0].event.clone();
        let resolution = recs[0].resolution;
        for rec in &recs {
            if rec.event != event {
                return Err(CorpusError::InconsistentClaimField {
                    claim_id,
                    field: "event",
                });
            }
            if rec.resolution != resolution {
                return Err(CorpusError::InconsistentClaimField {
                    claim_id,
                    field: "resolution",
                });
            }
        }

        let n_resolving = recs.iter().filter(|r| r.resolving).count();
        if n_resolving > 1 {
            return Err(CorpusError::MultipleResolving { claim_id });
        }
        if n_resolving == 0 {
            if opts.keep_unresolved {
                report.kept_unresolved.push(claim_id.clone());
            } else {
                report.dropped_unresolved.push(claim_id);
                continue;
            }
        }

        if recs.len() < 2 {
            return Err(CorpusError::ClaimTooSmall {
                claim_id,
                n_tweets: recs.len(),
            });
        }

        recs.sort_by(|a, b| a.timestamp.cmp(&b.timestamp).then_with(|| a.id.cmp(&b.id)));

        let resolving_index = recs.iter().position(|r| r.resolving);
        let tweets = recs
            .into_iter()
            .map(|r| Tweet {
                id: r.id,
                claim_id: r.claim_id,
                text: r.text,
                timestamp: r.timestamp,
                certainty_labels: r.certainty_labels,
                is_resolving: r.resolving,
                stance: r.stance,
            })
            .collect();

        events.insert(event.clone());
        claims.push(Claim {
            id: claim_id,
            event,
            resolution,
            tweets,
            resolving_index,
        });
    }

    Ok((Corpus { claims, events }, report))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::format;
    use alloc::string::ToString;
    use alloc::vec;

    fn rec(id: &str, claim: &str, ts: i64, resolving: bool) -> TweetInput {
        TweetInput {
            id: id.to_string(),
            claim_id: claim.to_string(),
            event: "ev".to_string(),
            text: "hello world".to_string(),
            timestamp: ts,
            resolving,
            resolution: Resolution::True,
            certainty_labels: None,
            stance: None,
        }
    }

    #[test]
    fn minimal_corpus_orders_tweets_by_time() {
        let records = vec![
            rec("t1", "c1", 30, false),
            rec("t2", "c1", 10, true),
            rec("t3", "c1", 20, false),
        ];
        let (corpus, report) = build_corpus(records, &ValidationOptions::default()).unwrap();
        assert_eq!(corpus.claims().len(), 1);
        assert!(report.dropped_unresolved.is_empty());
        let claim = &corpus.claims()[0];
        let ids: Vec<&str> = claim.tweets().iter().map(|t| t.id.as_str()).collect();
        assert_eq!(ids, vec!["t2", "t3", "t1"]);
        assert_eq!(claim.resolving_rank(), Some(1));
    }

    #[test]
    fn timestamp_ties_break_by_id() {
        let records = vec![
            rec("b", "c1", 10, true),
            rec("a", "c1", 10, false),
            rec("c", "c1", 10, false),
        ];
        let (corpus, _) = build_corpus(records, &ValidationOptions::default()).unwrap();
        let ids: Vec<&str> = corpus.claims()[0]
            .tweets()
            .iter()
            .map(|t| t.id.as_str())
            .collect();
        assert_eq!(ids, vec!["a", "b", "c"]);
    }

    #[test]
    fn unresolved_claims_are_dropped_with_report() {
        let records = vec![
            rec("t1", "c1", 1, false),
            rec("t2", "c1", 2, false),
            rec("t3", "c2", 1, true),
            rec("t4", "c2", 2, false),
        ];
        let (corpus, report) = build_corpus(records, &ValidationOptions::default()).unwrap();
        assert_eq!(corpus.claims().len(), 1);
        assert_eq!(corpus.claims()[0].id(), "c2");
        assert_eq!(report.dropped_unresolved, vec!["c1".to_string()]);
    }

    #[test]
    fn keep_unresolved_retains_claims_without_resolution_point() {
        let records = vec![rec("t1", "c1", 1, false), rec("t2", "c1", 2, false)];
        let opts = ValidationOptions {
            keep_unresolved: true,
        };
        let (corpus, report) = build_corpus(records, &opts).unwrap();
        assert_eq!(corpus.claims().len(), 1);
        assert!(!corpus.claims()[0].is_resolved());
        assert_eq!(report.kept_unresolved, vec!["c1".to_string()]);
        assert_eq!(corpus.resolved_claims().count(), 0);
    }

    #[test]
    fn dropping_unresolved_leaves_other_claims_untouched() {
        let kept = vec![rec("t3", "c2", 1, true), rec("t4", "c2", 2, false)];
        let mut mixed = vec![rec("t1", "c1", 1, false), rec("t2", "c1", 2, false)];
        mixed.extend(kept.clone());

        let (only, _) = build_corpus(kept, &ValidationOptions::default()).unwrap();
        let (from_mixed, _) = build_corpus(mixed, &ValidationOptions::default()).unwrap();
        assert_eq!(only.claims(), from_mixed.claims());
    }

    #[test]
    fn duplicate_tweet_id_is_rejected() {
        let records = vec![rec("t1", "c1", 1, true), rec("t1", "c1", 2, false)];
        let err = build_corpus(records, &ValidationOptions::default()).unwrap_err();
        assert_eq!(
            err,
            CorpusError::DuplicateTweetId {
                id: "t1".to_string()
            }
        );
    }

    #[test]
    fn two_resolving_tweets_name_the_claim() {
        let records = vec![rec("t1", "c9", 1, true), rec("t2", "c9", 2, true)];
        let err = build_corpus(records, &ValidationOptions::default()).unwrap_err();
        assert_eq!(
            err,
            CorpusError::MultipleResolving {
                claim_id: "c9".to_string()
            }
        );
        assert!(format!("{err}").contains("c9"));
    }

    #[test]
    fn single_tweet_claim_is_rejected() {
        let records = vec![rec("t1", "c1", 1, true), rec("t2", "c2", 1, true), rec("t3", "c2", 2, false)];
        let err = build_corpus(records, &ValidationOptions::default()).unwrap_err();
        assert_eq!(
            err,
            CorpusError::ClaimTooSmall {
                claim_id: "c1".to_string(),
                n_tweets: 1
            }
        );
    }

    #[test]
    fn inconsistent_resolution_is_rejected() {
        let mut records = vec![rec("t1", "c1", 1, true), rec("t2", "c1", 2, false)];
        records[1].resolution = Resolution::False;
        let err = build_corpus(records, &ValidationOptions::default()).unwrap_err();
        assert!(matches!(
            err,
            CorpusError::InconsistentClaimField {
                field: "resolution",
                ..
            }
        ));
    }

    #[test]
    fn index_tweets_is_a_permutation_with_ranks_1_to_n() {
        let records = vec![
            rec("t1", "c1", 50, false),
            rec("t2", "c1", 10, true),
            rec("t3", "c1", 30, false),
            rec("t4", "c1", 20, false),
        ];
        let (corpus, _) = build_corpus(records, &ValidationOptions::default()).unwrap();
        let indexed = index_tweets(&corpus.claims()[0]);
        let ranks: Vec<usize> = indexed.iter().map(|(r, _)| *r).collect();
        assert_eq!(ranks, vec![1, 2, 3, 4]);
        let mut ids: Vec<&str> = indexed.iter().map(|(_, t)| t.id.as_str()).collect();
        ids.sort();
        assert_eq!(ids, vec!["t1", "t2", "t3", "t4"]);
    }
}
