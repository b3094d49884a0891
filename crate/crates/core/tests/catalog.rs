use skeletal::catalog::{Catalog, EntryKind};

#[test]
fn counts_by_kind() {
    let cat = Catalog::load().unwrap();
    let want = [
        (EntryKind::FiniteRegular, 18),
        (EntryKind::PlanarApeirohedron, 6),
        (EntryKind::Blended, 12),
        (EntryKind::PureApeirohedron, 12),
        (EntryKind::Rank4Skeleton, 4),
        (EntryKind::SimplyFlagTransitiveComplex, 21),
        (EntryKind::ChiralFamily, 6),
    ];
    for (k, n) in want {
        assert_eq!(cat.count(k), n, "{k}");
    }
    let regular: usize = want[..4].iter().map(|(k, _)| cat.count(*k)).sum();
    assert_eq!(regular, 48);
}

#[test]
fn every_entry_verifies() {
    let cat = Catalog::load().unwrap();
    let jobs = std::thread::available_parallelism().map_or(1, |n| n.get());
    let reports = cat.verify_all(None, None, jobs);
    assert_eq!(reports.len(), cat.entries.len());
    let bad: Vec<String> = reports
        .iter()
        .filter(|r| !r.passed())
        .map(|r| format!("{}: {:?} {:?}", r.id, r.error, r.mismatches().collect::<Vec<_>>()))
        .collect();
    assert!(bad.is_empty(), "{bad:#?}");
}

#[test]
fn ids_are_unique_and_round_trip() {
    let cat = Catalog::load().unwrap();
    let text = serde_json::to_string(cat).unwrap();
    let back = Catalog::parse(&text).unwrap();
    assert_eq!(back.entries, cat.entries);
    let dup = text.replacen("\"id\":\"cube\"", "\"id\":\"tetrahedron\"", 1);
    assert!(Catalog::parse(&dup).is_err());
}
