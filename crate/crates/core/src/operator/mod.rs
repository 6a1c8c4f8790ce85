pub struct CkReport;
pub struct WcOperator;
