//! Full comparison of two algebras of the same degree.
//!
//! Prints the report as JSON; see `brauer-calc report` for the CLI form.

use brauer_calc::brauer::{AlgebraSpec, BrauerClass};
use brauer_calc::geometry::{equivalence_report, ReportOptions};

fn main() -> brauer_calc::Result<()> {
    let a = BrauerClass::from_strs(&[("2", "1/3"), ("3", "2/3")])?;
    let pairs = [
        (a.clone(), a.power(2)),
        (a.clone(), BrauerClass::from_strs(&[("2", "1/3"), ("5", "2/3")])?),
        (
            BrauerClass::from_strs(&[("inf", "1/2"), ("2", "1/2")])?,
            BrauerClass::from_strs(&[("inf", "1/2"), ("3", "1/2")])?,
        ),
    ];
    for (x, y) in pairs {
        let degree = x.index().max(y.index()) as usize;
        let sa = AlgebraSpec::ByInvariants { class: x, degree };
        let sb = AlgebraSpec::ByInvariants { class: y, degree };
        let r = equivalence_report(&sa, &sb, &ReportOptions::default())?;
        println!(
            "equivalent={} unseparated={} consistent={}",
            r.equivalent(),
            r.unseparated(),
            r.consistency
        );
        println!("{}", serde_json::to_string(&r).expect("serializable"));
    }
    Ok(())
}
