namespace acaf {}
