from horospinors.app import main

raise SystemExit(main())
