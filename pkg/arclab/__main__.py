from arclab.main import main

main()
