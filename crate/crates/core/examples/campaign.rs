//! A verification campaign run from code, printed as JSON.

use affstr::campaign::{cmd_verify, CampaignConfig};

fn main() -> affstr::Result<()> {
    let cfg = CampaignConfig::new(2, "LR", 1);
    let report = cmd_verify(&cfg)?;
    println!("{}", report.to_json());
    eprintln!("{} failed checks", report.failed_checks);
    Ok(())
}
