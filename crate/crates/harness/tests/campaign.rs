use hurwitz_core::ExactPoly;
use hurwitz_core::SequenceSpec;
use hurwitz_harness::campaign::{emit_reports, read_reports, run_campaign, CampaignConfig, Tier};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

#[test]
fn reports_are_byte_identical_across_job_counts() {
    let dir = tempfile::tempdir().unwrap();
    let mut bytes = Vec::new();
    for jobs in [1, 3, 8] {
        let mut cfg = CampaignConfig::new(SequenceSpec::Laguerre, 8, 2);
        cfg.reflect = true;
        cfg.jobs = jobs;
        let path = dir.path().join(format!("r{jobs}.jsonl"));
        emit_reports(&run_campaign(&cfg).unwrap(), &path).unwrap();
        bytes.push(std::fs::read(&path).unwrap());
    }
    assert_eq!(bytes[0], bytes[1]);
    assert_eq!(bytes[0], bytes[2]);
}

#[test]
fn injected_unstable_cell_is_flagged() {
    let mut cfg = CampaignConfig::new(SequenceSpec::Bell, 4, 2);
    cfg.inject.push((3, 2, ExactPoly::from_ints(&[0, -8, -2, 0, 1])));
    cfg.jobs = 2;
    let records = run_campaign(&cfg).unwrap();
    let flagged: Vec<_> = records.iter().filter(|r| r.flagged).map(|r| (r.k, r.n)).collect();
    assert_eq!(flagged, [(3, 2)]);

    // unflagged when stability is not conjectured for the family
    let mut cfg = CampaignConfig::new(SequenceSpec::Hermite, 4, 1);
    cfg.inject.push((1, 1, ExactPoly::from_ints(&[-1, 1])));
    assert!(run_campaign(&cfg).unwrap().iter().all(|r| !r.flagged));
}

#[test]
fn desk_examples_hold() {
    for (family, reflect, k_max) in
        [(SequenceSpec::Bell, false, 25), (SequenceSpec::Laguerre, true, 10), (SequenceSpec::Bessel, false, 10)]
    {
        let n_max = if k_max == 25 { 1 } else { 3 };
        let mut cfg = CampaignConfig::new(family, k_max, n_max);
        cfg.reflect = reflect;
        let records = run_campaign(&cfg).unwrap();
        assert_eq!(records.len(), (k_max + 1) * n_max);
        assert!(records.iter().all(|r| r.verdict && !r.flagged));
    }
}

#[test]
fn tier_and_jobs_limits_are_enforced() {
    let mut cfg = CampaignConfig::new(SequenceSpec::Bell, 26, 1);
    assert!(run_campaign(&cfg).is_err());
    cfg.tier = Tier::Full;
    cfg.k_max = 2;
    cfg.n_max = 6;
    assert!(run_campaign(&cfg).is_err());
    cfg.n_max = 1;
    cfg.jobs = 0;
    assert!(run_campaign(&cfg).is_err());
}

#[test]
fn emit_reports_examples() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.jsonl");
    emit_reports(&[], &empty).unwrap();
    assert_eq!(std::fs::read(&empty).unwrap(), b"");

    let one = dir.path().join("one.jsonl");
    let rec = run_campaign(&CampaignConfig::new(SequenceSpec::Bell, 0, 1)).unwrap();
    emit_reports(&rec, &one).unwrap();
    let text = std::fs::read_to_string(&one).unwrap();
    assert_eq!(text.lines().count(), 1);
    let v: serde_json::Value = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(v["family"], "bell");
    assert_eq!(v["schema"], 1);

    let mut many = Vec::new();
    for family in [SequenceSpec::Bessel, SequenceSpec::Bell] {
        many.extend(run_campaign(&CampaignConfig::new(family, 24, 2)).unwrap());
    }
    // 100 records
    assert_eq!(many.len(), 100);
    let sorted = many.clone();
    many.shuffle(&mut ChaCha8Rng::seed_from_u64(1));
    let path = dir.path().join("many.jsonl");
    emit_reports(&many, &path).unwrap();
    let back = read_reports(&path).unwrap();
    let keys: Vec<_> = back.iter().map(|r| (r.family.clone(), r.k, r.n)).collect();
    let mut want: Vec<_> = sorted.iter().map(|r| (r.family.clone(), r.k, r.n)).collect();
    want.sort();
    assert_eq!(keys, want);
}

#[test]
fn emit_reports_surfaces_path_in_errors() {
    let err = emit_reports(&[], std::path::Path::new("/nonexistent-dir/x.jsonl")).unwrap_err();
    assert!(format!("{err:#}").contains("/nonexistent-dir/x.jsonl"));
}
