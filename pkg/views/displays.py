import logging
import streamlit as st
from models.configs import RunConfig
from models.reports import Report
from runs.commands import cmd_conjecture, cmd_gen, cmd_measure, cmd_sweep, cmd_verify
from runs.emitters import rows_frame
from views.sidebars import display_sidebar


class Display:
    """
    The User Interface for the lab using streamlit, one tab per command
    """

    options: dict

    def __init__(self):
        self.options = {}
        self.progress_container = None

    def config(self, command: str, **fields) -> RunConfig:
        return RunConfig(command=command, **self.options, **fields)

    @staticmethod
    def display_report(report: Report) -> None:
        """
        Show the rows of a report, its notes and the overall verdict
        """
        if report.rows:
            frame = rows_frame(report)
            frame["detail"] = [row.detail for row in report.rows]
            st.dataframe(data=frame, hide_index=True)
        for note in report.notes:
            st.warning(note)
        if not report.complete:
            st.warning("Incomplete: some checks exceeded their budget")
        if report.passed:
            st.success("All checks passed")
        else:
            st.error("Some checks failed")

    def run_with_progress(self, action, config: RunConfig) -> Report:
        """
        Run a long command with a progress bar fed by the sweep's progress callback
        """
        logging.info(f"Kicking off {config.command}")
        with self.progress_container.container():
            bar = st.progress(0.0, text=f"Kicking off {config.command}")
        report = action(config, bar.progress)
        bar.empty()
        return report

    def display_measure(self) -> None:
        word = st.text_input("Word", value="aabaa")
        alphabet = st.selectbox("Alphabet", options=["inferred", "binary", "digits", "bytes"])
        if st.button("Measure"):
            chosen = None if alphabet == "inferred" else alphabet
            report = cmd_measure(self.config("measure", word=word, alphabet=chosen))
            st.json(report.details)
            self.display_report(report)

    def display_gen(self) -> None:
        kind = st.selectbox("Family", options=["runmin", "clustered", "debruijn", "lfsr"])
        col1, col2, col3 = st.columns(3)
        with col1:
            k = st.number_input("k", min_value=1, max_value=22, value=3)
        with col2:
            sigma = st.number_input("sigma", min_value=2, max_value=62, value=2)
        with col3:
            extra = st.text_input("Exponents or polynomial", value="", help="2,4,3 for clustered; x^4+x+1 for lfsr")
        if st.button("Generate"):
            fields = {"kind": kind, "k": int(k), "sigma": int(sigma)}
            if kind == "clustered" and extra:
                fields["exponents"] = extra
                fields.pop("sigma")
            if kind == "lfsr":
                fields["poly"] = extra
            report = cmd_gen(self.config("gen", **fields))
            st.markdown(f'<p class="mono">{report.payload}</p>', unsafe_allow_html=True)
            st.json(report.details)

    def display_verify(self) -> None:
        scope = st.selectbox("Scope", options=["runmin", "clustered", "sigma-bounds", "primitivity", "all"])
        trials = st.number_input("Trials per sigma", min_value=1, value=50)
        if st.button("Verify"):
            report = self.run_with_progress(cmd_verify, self.config("verify", scope=scope, trials=int(trials)))
            self.display_report(report)

    def display_sweep(self) -> None:
        sigma = st.number_input("Largest sigma", min_value=2, max_value=62, value=12)
        trials = st.number_input("Trials", min_value=1, value=50, key="sweep_trials")
        if st.button("Sweep"):
            report = self.run_with_progress(cmd_sweep, self.config("sweep", sigma=int(sigma), trials=int(trials)))
            self.display_report(report)

    def display_conjecture(self) -> None:
        k = st.number_input("Order", min_value=2, max_value=15, value=5, key="conjecture_k")
        if st.button("Run census"):
            report = cmd_conjecture(self.config("conjecture", k=int(k)))
            census = report.details
            st.metric("Valid dollar positions", len(census["scan"]["valid_positions"]))
            if census["census_done"]:
                st.metric("De Bruijn cycles", census["cycle_count"])
                st.metric("Run-minimal achievers", len(census["achievers"]))
                with st.expander("Achievers", expanded=False):
                    st.markdown(
                        f'<p class="small-font mono">{"<br>".join(census["achievers"])}</p>', unsafe_allow_html=True
                    )
            self.display_report(report)

    def display_page(self) -> None:
        """
        Show the full UI: the shared options in the sidebar and a tab per command
        """
        self.options = display_sidebar()
        st.title("Suffixient Lab")
        self.progress_container = st.empty()
        tabs = st.tabs(["Measure", "Generate", "Verify", "Sweep", "Conjecture"])
        panels = [self.display_measure, self.display_gen, self.display_verify, self.display_sweep, self.display_conjecture]
        for tab, panel in zip(tabs, panels):
            with tab:
                try:
                    panel()
                except (ValueError, RuntimeError) as e:
                    st.error(f"{e}")
