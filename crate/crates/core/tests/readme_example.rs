//! The library example from README.md, kept compiling and passing.

use ptsemi::{closure, repsearch, tsemi};

#[test]
fn readme_library_example() -> Result<(), ptsemi::Error> {
    let phi = tsemi::generate(2, &["0,0".parse()?, "0,1".parse()?], true)?;
    let sys = phi.extract_abstract()?;

    let chi0 = closure::chi0(&sys)?;
    assert_eq!(Some(&chi0), sys.chi_rel());

    match repsearch::find_representation(&sys, 2, false)? {
        repsearch::SearchOutcome::Found(rep) => {
            assert!(repsearch::verify_representation(&sys, &rep)?.all_pass());
        }
        other => panic!("unexpected outcome: {other:?}"),
    }
    Ok(())
}
