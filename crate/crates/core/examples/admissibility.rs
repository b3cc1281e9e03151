//! Rank and integer-relation checks for the preset collections and a planted relation.

use zetalab::parameters::{check_admissibility, presets, relation_search, ExactReal, LogSet, RelationSettings};

fn main() -> zetalab::Result<()> {
    for c in presets() {
        let r = check_admissibility(&c, &RelationSettings::default())?;
        println!(
            "{:<14} ranks {:?} relation found {} ({} subsets) admissible {}",
            c.label().unwrap_or("inline"),
            r.ranks,
            r.relation.found,
            r.relation.subsets_tested,
            r.admissible
        );
    }
    // 3 log 2 + 2 log 3 = log 72
    let exprs = ["log(2)", "log(3)", "log(72)"].iter().map(|e| ExactReal::parse(e)).collect::<zetalab::Result<_>>()?;
    let r = relation_search(&LogSet::from_exprs(exprs)?, 3, 50, 100)?;
    println!("planted: found {} coefficients {:?}", r.found, r.coefficients);
    Ok(())
}
