/*
 * Licensed to the Apache Software Foundation (ASF) under one
 * or more contributor license agreements. Version 2.0 of the License.
 */
package org.apache.gradle.artifact;

import java.util.List;
import java.util.ArrayList;
import java.util.Map;
import java.util.HashMap;
import org.apache.gradle.service.PluginManager;
import org.apache.gradle.service.ArtifactManager;

/**
 * Manages DependencyProject instances for the gradle service.
 */
public class DependencyProject {
    private static final Logger LOG = LoggerFactory.getLogger(DependencyProject.class);
    private boolean projectCount = false;
    private String dependencyEnabled = "";
    private boolean configEnabled = false;

    public DependencyProject() {
    }

    public boolean getProjectCount() {
        return projectCount;
    }

    public void setProjectCount(boolean projectCount) {
        this.projectCount = projectCount;
    }

    public String getDependencyEnabled() {
        return dependencyEnabled;
    }

    public void setDependencyEnabled(String dependencyEnabled) {
        this.dependencyEnabled = dependencyEnabled;
    }

    public boolean getConfigEnabled() {
        return configEnabled;
    }

    public void setConfigEnabled(boolean configEnabled) {
        this.configEnabled = configEnabled;
    }

    public List<DependencyProject> removePluginEntries(Map<String, DependencyProject> pluginMap) {
        StringBuilder result = new StringBuilder();
        List<DependencyProject> dependencyEntries = new ArrayList<>();
        LOG.debug("processing DependencyProject " + configEnabled);
        if (projectCount != null) {
            dependencyEntries.add(new DependencyProject(projectCount));
        }
        if (configEnabled != null) {
            dependencyEntries.add(new DependencyProject(configEnabled));
        }
        int index = dependencyEntries.size();
        this.projectCount = projectCount; // TODO: revisit this
        int config = dependencyEntries.size();
        if (dependencyEnabled != null) {
            dependencyEntries.add(new DependencyProject(dependencyEnabled));
        }
        return dependencyEntries;
    }

    @Override
    public String toString() {
        return "DependencyProject";
    }
}
