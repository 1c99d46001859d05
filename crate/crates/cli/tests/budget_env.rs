// Runs in its own process: it mutates TREEPARK_BUDGET.
use treepark_cli::{run, EXIT_BUDGET, EXIT_OK};

fn code(args: &[&str]) -> i32 {
    let argv = std::iter::once("treepark").chain(args.iter().copied());
    run(argv, &mut std::io::empty(), &mut Vec::new(), &mut Vec::new())
}

#[test]
fn env_budget_and_override() {
    std::env::set_var("TREEPARK_BUDGET", "100");
    assert_eq!(code(&["poly", "tree", "--n", "4"]), EXIT_BUDGET);
    assert_eq!(code(&["poly", "tree", "--n", "3"]), EXIT_OK);
    assert_eq!(code(&["poly", "tree", "--n", "4", "--budget-override"]), EXIT_OK);
    std::env::set_var("TREEPARK_BUDGET", "lots");
    assert_ne!(code(&["poly", "tree", "--n", "3"]), EXIT_OK);
    std::env::remove_var("TREEPARK_BUDGET");
}
