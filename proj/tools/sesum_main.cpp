// CLI entry point; subcommands are wired up once the report builders land.
int main() { return 0; }
