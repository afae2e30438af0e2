from hydrenyi.cli import entry

entry()
