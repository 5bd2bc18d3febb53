#!/usr/bin/env python3
"""
Simple runner script for the Graph Mates census engine

For anyone who wants a census without remembering the command-line flags.
"""

import os
import sys
import subprocess
from pathlib import Path

SRC = Path(__file__).parent / 'src'


def main():
    """Main entry point with simple menu."""

    print("🔢 Graph Mates - cospectral and coinvariant mate census")
    print("=" * 55)
    print()
    print("Choose an option:")
    print("1. Setup (first time)")
    print("2. Generate graphs or trees (graph6)")
    print()
    print("📊 CENSUS:")
    print("3. Single-invariant census")
    print("4. Joint census of two invariants")
    print("5. Pairwise table / best pairs")
    print("6. Tree census")
    print()
    print("🔍 INSPECT:")
    print("7. Show one matrix of a graph")
    print("8. Run the oracle suite")
    print()
    print("9. Help")
    print("0. Exit")
    print()

    while True:
        try:
            choice = input("Enter your choice (0-9): ").strip()

            if choice == '0':
                print("Goodbye! 👋")
                break
            elif choice == '1':
                run_command(['setup'])
            elif choice == '2':
                spec = input("Generator (e.g. graphs:6 or trees:10): ").strip() or "graphs:6"
                output = input("Output file (empty for screen): ").strip() or None
                cmd = ['gen', spec]
                if output:
                    cmd.extend(['--output', output])
                run_command(cmd)
            elif choice == '3':
                source = ask_source()
                params = input("Invariants, space separated (e.g. spec:A snf:L): ").split() or ['spec:A']
                cmd = ['census', *source]
                for param in params:
                    cmd.extend(['--param', param])
                mates = input("Mate file (optional, single invariant only): ").strip()
                if mates:
                    cmd.extend(['--mates', mates])
                run_command(cmd)
            elif choice == '4':
                source = ask_source()
                first = input("First invariant (e.g. spec:WA): ").strip() or 'spec:WA'
                second = input("Second invariant (e.g. snf:DL): ").strip() or 'snf:DL'
                semantics = input("Semantics (joint/set-intersection, default joint): ").strip() or 'joint'
                run_command(['pair-census', *source, '--param', first, '--param', second,
                             '--semantics', semantics])
            elif choice == '5':
                source = ask_source()
                rows = input("Row invariants, comma separated (empty for all 40): ").strip()
                cols = input("Column invariants (empty for same as rows): ").strip()
                top = input("Rank best K pairs instead (empty for the grid): ").strip()
                cmd = ['table', *source]
                if rows:
                    cmd.extend(['--rows', rows])
                if cols:
                    cmd.extend(['--cols', cols])
                if top:
                    cmd.extend(['--top', top])
                run_command(cmd)
            elif choice == '6':
                print("\n🌳 Trees up to 14 vertices take a few minutes")
                orders = input("Orders (default 1-14): ").strip() or '1-14'
                run_command(['trees', '--orders', orders])
            elif choice == '7':
                kind = input("Matrix (e.g. A, L, DL, WDdegPlus): ").strip() or 'A'
                record = input("graph6 record (e.g. Bw): ").strip() or 'Bw'
                run_command(['matrix', '--kind', kind, '--graph6', record])
            elif choice == '8':
                run_command(['verify'])
            elif choice == '9':
                show_help()
            else:
                print("Invalid choice. Please enter 0-9.")

        except KeyboardInterrupt:
            print("\n\nGoodbye! 👋")
            break
        except EOFError:
            print("\nGoodbye! 👋")
            break
        except Exception as e:
            print(f"Error: {e}")

        print()  # Add spacing between runs


def ask_source():
    """Either a graph6 file or a generator spec."""
    path = input("graph6 file (empty to generate): ").strip()
    if path:
        return ['--input', path]
    spec = input("Generator (default graphs:6): ").strip() or 'graphs:6'
    return ['--gen', spec]


def run_command(args):
    """Run a CLI command and handle errors gracefully."""
    env = dict(os.environ)
    env['PYTHONPATH'] = os.pathsep.join(filter(None, [str(SRC), env.get('PYTHONPATH')]))
    try:
        subprocess.run([sys.executable, '-m', 'graph_mates', *args], check=True, env=env)
    except subprocess.CalledProcessError as e:
        print(f"Command failed with exit code {e.returncode}")
    except FileNotFoundError:
        print("Error: Python not found. Make sure Python is installed and in your PATH.")


def show_help():
    """Show help information."""
    print()
    print("🆘 Quick Help:")
    print()
    print("FIRST TIME SETUP:")
    print("1. Choose option 1 to create config/config.env")
    print("2. Edit it to set worker count, reports directory or hashing mode")
    print()
    print("INVARIANTS:")
    print("- spec:<M> is the characteristic polynomial of matrix M")
    print("- snf:<M> is the Smith normal form of matrix M")
    print("- M is one of A L Q D DL DQ Ddeg DdegPlus Atr AtrPlus, or W<M> for a walk matrix")
    print("- Join two with '+' for a joint parameter, e.g. spec:WA+snf:DL")
    print()
    print("INPUT:")
    print("- graph6 files, one graph per line, all of the same order")
    print("- built-in generators: graphs:N (connected, N <= 8) and trees:N")
    print("- for larger orders pipe in `geng -c N`")
    print()
    print("OUTPUT:")
    print("- CSV on standard output, tables and progress on standard error")
    print("- mate files list one class of mates per line")
    print()
    print("For more detailed help, see README.md")


if __name__ == '__main__':
    main()
