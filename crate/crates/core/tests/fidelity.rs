use heptacore::expr::eval_str;
use heptacore::identities::Registry;
use heptacore::inequalities::standard_claims;

#[test]
fn identity_texts_match_builders() {
    let registry = Registry::standard();
    let mut compared = 0;
    for record in registry.records() {
        for (label, side) in [("lhs", &record.lhs), ("rhs", &record.rhs)] {
            let Some(text) = &side.text else { continue };
            let from_text =
                eval_str(text, 200).unwrap_or_else(|e| panic!("{} {label}: {e}", record.id));
            let built = (side.build)(200).unwrap();
            assert_eq!(from_text, built, "{} {label}: {text}", record.id);
            compared += 1;
        }
    }
    assert!(compared >= 90, "only {compared} text sides");
}

#[test]
fn positivity_texts_parse() {
    for claim in standard_claims() {
        if let Some(text) = claim.expression() {
            heptacore::expr::parse(text).unwrap_or_else(|e| panic!("{}: {e}", claim.id));
        }
    }
}
