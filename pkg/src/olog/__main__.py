from olog.cli import console_main

console_main()
