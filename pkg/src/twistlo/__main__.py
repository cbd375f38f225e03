from twistlo.cli import main

main()
